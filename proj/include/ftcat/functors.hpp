#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftcat/tensorcat.hpp"

namespace ftcat {

/// Quasi-tensor functor seen on classes: A[i] is the class of F(L_i) in the
/// target Grothendieck ring, and B[j][i] is the multiplicity of P'_j in
/// F(P_i). The image's Cartan matrix can be supplied (indexed by the image
/// labels in target order) or the image declared semisimple.
struct FunctorData {
  TensorCategory source;
  TensorCategory target;
  IntMatrix A;
  std::optional<IntMatrix> B;
  std::optional<IntMatrix> image_cartan;
  bool image_semisimple = false;
};

Report validate_functor(const FunctorData& f);

struct Image {
  std::vector<int> labels;  // target indices, ascending
  BasedRing ring;
};
Image image_closure(const FunctorData& f);

enum class Tri { False, True, Undetermined };
std::string to_string(Tri t);

struct Verdict {
  Tri value = Tri::Undetermined;
  std::string reason;
  Report findings;
};

// d+(Im F) when the image's Cartan data is known or can be inferred soundly.
std::optional<RealAlgebraic> image_dimension(const FunctorData& f);

Verdict is_surjective(const FunctorData& f);
Verdict is_injective(const FunctorData& f);
// Throws ImageCartanUnavailable instead of answering Undetermined.
bool is_surjective_strict(const FunctorData& f);
bool is_injective_strict(const FunctorData& f);

struct Freeness {
  NFElement ratio;  // in the source's field
  bool ok = false;
  Report findings;
};
Freeness freeness_check(const FunctorData& f);

struct IntegerFreeness {
  bool integer = false;
  Integer rank;
};
IntegerFreeness integer_freeness(const FunctorData& f);

struct Lagrange {
  NFElement quotient;  // in the ambient field
  bool integral = false;
  Report findings;
};
// embed[i] is the ambient index of the sub category's simple i.
Lagrange lagrange(const TensorCategory& sub, const TensorCategory& amb, const std::vector<int>& embed);

bool verify_dual_pair(const TensorCategory& c, const TensorCategory& cdual);
Report verify_center_dim(const TensorCategory& c, const TensorCategory& z, const FunctorData& forgetful);

}  // namespace ftcat
