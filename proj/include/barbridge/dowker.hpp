#pragma once

#include <utility>
#include <vector>

#include "barbridge/complex.hpp"
#include "barbridge/persistence.hpp"

namespace barbridge {

struct DowkerBarcodeCheck {
  PersistenceResult landmark_side;  // W(B)
  PersistenceResult witness_side;   // W(B^T)
  bool equal = false;
};

// Barcodes of both witness filtrations in degree k; equal compares the
// multisets of (birth value, death value).
DowkerBarcodeCheck dowker_barcode_check(const CrossDissimilarityMatrix& b, int k,
                                        const FieldSpec& field);

// Matches bars by equal (birth value, death value). Throws
// AssumptionViolation on repeated endpoint pairs within a side and
// InputError when the two barcodes differ.
std::vector<std::pair<BarId, BarId>> dowker_bar_correspondence(const PersistenceResult& p_side,
                                                               const PersistenceResult& q_side);

struct DowkerDualResult {
  double eps = 0;
  Chain input;  // on landmark ids
  Chain dual;   // on witness ids
  // (k+1)-chain of the cross complex (landmark p -> p, witness q -> n + q)
  // with boundary equal to input - dual there.
  Chain certificate;
};

// Dual of a k-cycle of W(B) at eps. Throws InputError when z is not a cycle of
// W(B) truncated at eps, and Error if no dual exists in the capped cross
// complex.
DowkerDualResult dowker_dual_cycle(const CrossDissimilarityMatrix& b, double eps, const Chain& z,
                                   int k, const FieldSpec& field);

// Duals of several cycles at one eps, sharing a single reduction.
std::vector<DowkerDualResult> dowker_dual_cycles(const CrossDissimilarityMatrix& b, double eps,
                                                 const std::vector<Chain>& zs, int k,
                                                 const FieldSpec& field);

// Checks boundary(certificate) == input - dual in the cross complex.
bool verify_dual(const DowkerDualResult& r, std::size_t landmarks, const FieldSpec& field);

// Landmark-side chain moved into cross-complex ids and back.
Chain landmark_to_cross(const Chain& z, std::size_t landmarks);
Chain witness_to_cross(const Chain& y, std::size_t landmarks);

}  // namespace barbridge
