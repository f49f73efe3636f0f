#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "barbridge/complex.hpp"
#include "barbridge/decompositions.hpp"
#include "barbridge/persistence.hpp"

namespace barbridge {

// Restrictions of [tau] at one grade: baseline + span(offsets), as cycles of
// the auxiliary filtration Z^psi ∩ Y^at.
struct RestrictionSet {
  Grade at = 0;
  Chain baseline;
  std::vector<Chain> offsets;
  std::vector<BarId> offset_bars;  // auxiliary bars behind each offset
};

// The same chains read as cycles of Y^at.
struct CycleExtensionSet {
  Grade at = 0;
  Chain baseline;
  std::vector<Chain> offsets;
};

// Cycle extensions written in bars of Y (under Y's stored decomposition).
struct BarExtensionSet {
  Grade at = 0;
  BarRepresentation baseline;
  std::vector<BarRepresentation> offsets;
};

struct ExtensionResult {
  Grade psi = 0;
  Chain source;
  std::shared_ptr<const PersistenceResult> aux;
  BarRepresentation source_in_aux;  // at the last grade of the auxiliary filtration
  Grade l0 = 0;
  std::vector<Grade> p_y;
  // The three vectors below are aligned with p_y; bar_extensions stays empty
  // for cycle-level calls.
  std::vector<RestrictionSet> restrictions;
  std::vector<CycleExtensionSet> extensions;
  std::vector<BarExtensionSet> bar_extensions;
};

// Persistence of Z^psi ∩ Y^• in degree k.
std::shared_ptr<const PersistenceResult> auxiliary_persistence(const GradedComplex& z, Grade psi,
                                                               const GradedComplex& y, int k,
                                                               const FieldSpec& field);

// Cycle-to-cycles extension of [tau] in H_k(Z^psi). Throws TrivialClassError
// when tau bounds in Z^psi and InputError when it is not a cycle of Z^psi.
ExtensionResult cycle_to_cycles(const GradedComplex& z, const GradedComplex& y, Grade psi,
                                const Chain& tau, int k, const FieldSpec& field);
// Same, on an auxiliary result computed (or re-decomposed) by the caller.
ExtensionResult cycle_to_cycles(std::shared_ptr<const PersistenceResult> aux, Grade psi,
                                const Chain& tau);

// Fills bar_extensions from Y's decomposition.
void attach_bar_extensions(ExtensionResult& result, const PersistenceResult& y);

// Cycle-to-bar extension: cycle_to_cycles followed by bar representations in Y.
ExtensionResult cycle_to_bar(const GradedComplex& z, const PersistenceResult& y, Grade psi,
                             const Chain& tau);

enum class ExtensionMode { automatic, general, f2_unique_deaths };

struct ExtensionOptions {
  ExtensionMode mode = ExtensionMode::automatic;
  std::optional<Grade> psi;  // defaults to death - 1
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct BarExtensionResult {
  BarId bar = 0;
  Grade psi = 0;
  ExtensionMode mode = ExtensionMode::general;  // resolved, never automatic
  TerminalClassSet terminal;
  std::vector<ExtensionResult> per_class;  // aligned with terminal.classes
  bool truncated = false;
};

// Throws AssumptionViolation if f2_unique_deaths is requested on a field
// other than GF(2) or with repeated death grades in Z's barcode.
ExtensionMode resolve_mode(const PersistenceResult& z, ExtensionMode requested);

// Bar-to-bars extension of a bar of Z's barcode into Y's barcode.
BarExtensionResult bar_to_bars(const PersistenceResult& z, const PersistenceResult& y, BarId bar,
                               const ExtensionOptions& options = {});

// Bar-to-cycle extension: as bar_to_bars without the bar representations.
BarExtensionResult bar_to_cycle(const PersistenceResult& z, const GradedComplex& y, BarId bar,
                                const ExtensionOptions& options = {});

// Lazily enumerates baseline + sum c_i offsets_i over every coefficient tuple
// (base-p counter, first offset least significant).
template <class T>
class AffineEnumerator {
 public:
  AffineEnumerator(T baseline, std::vector<T> offsets, const FieldSpec& field,
                   std::uint64_t cap = kDefaultEnumerationCap)
      : baseline_(std::move(baseline)),
        offsets_(std::move(offsets)),
        field_(field),
        cap_(cap),
        digits_(offsets_.size(), 0) {}

  std::optional<T> next();
  const std::vector<Scalar>& last_coefficients() const noexcept { return last_; }
  bool truncated() const noexcept { return truncated_; }
  std::uint64_t produced() const noexcept { return produced_; }

 private:
  T baseline_;
  std::vector<T> offsets_;
  FieldSpec field_;
  std::uint64_t cap_;
  std::vector<Scalar> digits_, last_;
  std::uint64_t produced_ = 0;
  bool done_ = false, truncated_ = false;
};

Chain combine(const Chain& baseline, const std::vector<Chain>& offsets,
              const std::vector<Scalar>& coefficients, const FieldSpec& field);
BarRepresentation combine(const BarRepresentation& baseline,
                          const std::vector<BarRepresentation>& offsets,
                          const std::vector<Scalar>& coefficients, const FieldSpec& field);

template <class T>
std::optional<T> AffineEnumerator<T>::next() {
  if (done_) return std::nullopt;
  if (produced_ == cap_) {
    done_ = true;
    truncated_ = true;
    return std::nullopt;
  }
  last_ = digits_;
  T out = combine(baseline_, offsets_, digits_, field_);
  ++produced_;
  bool carried = true;
  for (Scalar& d : digits_) {
    if (++d < field_.characteristic()) {
      carried = false;
      break;
    }
    d = 0;
  }
  if (carried) done_ = true;
  return out;
}

}  // namespace barbridge
