#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3acm/lattice.hpp"

// Effectivity oracle and the classification of initialized aCM line bundles
// on a smooth quartic surface, keyed on (B^2, h.B) and two emptiness facts.
namespace k3acm {

enum class AssumptionKind { Effective, Empty, IrreducibleCurve, EllipticPencil, BasePointFree };

std::string_view to_string(AssumptionKind kind);
AssumptionKind assumption_kind_from_string(std::string_view text);

struct Assumption {
    DivClass subject;
    AssumptionKind kind = AssumptionKind::Effective;
    std::string note;

    friend bool operator==(const Assumption&, const Assumption&) = default;
};

using Assumptions = std::vector<Assumption>;

enum class Effectivity { Effective, Empty, Unknown };

std::string_view to_string(Effectivity value);

struct Verdict {
    Effectivity value = Effectivity::Unknown;
    std::string reason;  // rule id; "undecided" for Unknown
};

enum class AcmStatus { NotAcm, Acm, AcmUlrich, NeedsAssumption };
enum class AcmCase { a, b, c, d, none };

std::string_view to_string(AcmStatus status);
std::string_view to_string(AcmCase tag);

struct AcmClassification {
    AcmStatus status = AcmStatus::NotAcm;
    AcmCase case_tag = AcmCase::none;
    Assumptions missing;  // unresolved emptiness facts for case (d)

    bool initialized_acm() const noexcept
    {
        return status == AcmStatus::Acm || status == AcmStatus::AcmUlrich;
    }
};

struct Companion {
    DivClass cls;
    std::string rule;
    AcmClassification classification;  // status NotAcm for the dual, which is never initialized
};

enum class Tristate { Yes, No, Unknown };

std::string_view to_string(Tristate value);

// Throws ConflictingAssumptions when the list asserts both sections and
// emptiness for one class, or contradicts the Riemann-Roch rules.
void check_assumptions(const Lattice& L, const Assumptions& assumptions);

Verdict effectivity(const Lattice& L, const DivClass& d, const Assumptions& assumptions);

AcmClassification is_initialized_acm(const Lattice& L, const DivClass& b,
                                     const Assumptions& assumptions);

std::vector<Companion> acm_companions(const Lattice& L, const DivClass& b,
                                      const AcmClassification& classification,
                                      const Assumptions& assumptions);

Tristate is_elliptic_pencil_class(const Lattice& L, const DivClass& d,
                                  const Assumptions& assumptions);

}  // namespace k3acm
