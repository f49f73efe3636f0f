#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barbridge/complex.hpp"
#include "barbridge/dowker.hpp"
#include "barbridge/extension.hpp"
#include "barbridge/persistence.hpp"

namespace barbridge {

enum class AnalogousMode { feature, similarity };

struct AnalogousOptions {
  ExtensionMode extension_mode = ExtensionMode::automatic;
  std::optional<Grade> psi;  // override for the selected bar
  std::uint64_t cap = kDefaultEnumerationCap;
  // Feature mode: members of each witness-side extension set that get dualized.
  std::uint64_t member_cap = 64;
};

// The four filtrations of a triple (M_Q, M_P, M_QP) in degree k. Rows of
// M_QP index Q.
struct AnalogousInputs {
  std::shared_ptr<const PersistenceResult> clique_q;    // X_Q
  std::shared_ptr<const PersistenceResult> witness_qp;  // W_{Q,P}, on Q
  std::shared_ptr<const PersistenceResult> witness_pq;  // W_{P,Q}, on P
  std::shared_ptr<const PersistenceResult> clique_p;    // X_P
  CrossDissimilarityMatrix cross;                       // M_QP
  int k = 0;
  FieldSpec field;
};

// Throws InputError when M_QP does not have shape |Q| x |P|.
AnalogousInputs prepare_analogous(const DissimilarityMatrix& m_q, const DissimilarityMatrix& m_p,
                                  const CrossDissimilarityMatrix& m_qp, int k,
                                  const FieldSpec& field);

// One dual cycle produced by the dualization stage of feature mode.
struct FeatureDual {
  std::size_t terminal_index = 0;  // terminal class of the source bar
  Grade at = 0;                    // witness grade of the extension
  // Coefficients of the extension member on the offsets at `at`; all zero for
  // the baseline.
  std::vector<Scalar> member;
  // Grade of the member's terminal parameter in W_{Q,P}; the dual is taken at
  // its value.
  Grade dual_at = 0;
  DowkerDualResult dual;
  BarRepresentation witness_class;  // [dual] in W_{P,Q} at dual_at
  ExtensionResult extension;        // cycle_to_bar into X_P at psi = death - 1
};

struct AnalogousDiagnostics {
  Grade l0 = 0;
  std::vector<std::pair<Grade, Grade>> aux_barcode;  // first auxiliary filtration
  std::string message;
};

struct AnalogousBarsResult {
  AnalogousMode mode = AnalogousMode::feature;
  BarId selected = 0;
  // Feature: selected bar of X_Q extended into W_{Q,P}. Similarity: selected
  // witness bar extended into X_Q.
  BarExtensionResult source;
  // Similarity only: partner bar of W_{P,Q} and its extension into X_P.
  std::optional<BarId> partner;
  std::optional<BarExtensionResult> target;
  // Feature only, deduplicated by class at the terminal parameter.
  std::vector<FeatureDual> duals;
  bool truncated = false;
  bool empty = false;
  AnalogousDiagnostics diagnostics;
};

// Feature-centric analogous bars: tau is a bar of X_Q.
AnalogousBarsResult feature_centric(const AnalogousInputs& in, BarId tau,
                                    const AnalogousOptions& options = {});

// Similarity-centric analogous bars: tau is a bar of W_{Q,P}.
AnalogousBarsResult similarity_centric(const AnalogousInputs& in, BarId tau,
                                       const AnalogousOptions& options = {});

// Bars of the baseline analogous pair: the bars of X_Q and X_P appearing in
// the baseline representations at the first extension grade.
struct AnalogousPair {
  std::vector<BarId> q_side;
  std::vector<BarId> p_side;
  friend bool operator==(const AnalogousPair&, const AnalogousPair&) = default;
};
AnalogousPair baseline_pair(const AnalogousBarsResult& result);

}  // namespace barbridge
