#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewminor/generators.hpp"
#include "skewminor/matrix.hpp"
#include "skewminor/minors.hpp"

namespace skewminor {

/// E joins x, y when a_xy = b_xy; D joins them when a_xy = -b_xy.
enum class SignRelation { E, D };

/// Connected components of the E or D relation, ordered by smallest member.
struct SignPartition {
  SignRelation mode = SignRelation::E;
  std::vector<Subset> classes;
};

/// Requires A dense, same labels and field, and b_xy in {a_xy, -a_xy} for
/// every pair; throws PreconditionError with the offending pair otherwise.
SignPartition equivalence_classes(const SkewMatrix& a, const SkewMatrix& b, SignRelation mode);

/// True iff every E-class and every D-class is a clan of A and of B. Throws
/// PreconditionError unless |V| >= 3, both are dense, and A^inf, B^inf are
/// (<= 4)-HL-equivalent.
bool check_lopez(const SkewMatrix& a, const SkewMatrix& b);

struct RecoverOptions {
  /// Check (<= 4)-HL-equivalence of A and B before recovering.
  bool verify_input = false;
};

/// Sign witness for B against a dense HL-indecomposable A: anchors the
/// first label, normalises both matrices to an all-ones first row, decides
/// between the equal and the transposed branch, and verifies the result.
///
/// Throws DensityError (A not dense), DomainError (|V| < 4 or mismatched
/// labels), HypothesisError carrying the HL-clan when A is HL-decomposable,
/// and HypothesisError carrying a counterexample pair when B is not related
/// to A as claimed.
Witness recover_witness(const SkewMatrix& a, const SkewMatrix& b, RecoverOptions options = {});

/// Nonsingular diagonal D with B = D^-1 A D or B^t = D^-1 A D. For dense
/// skew pairs the ratios d_j/d_i are +-1, so this reduces to sign vectors
/// anchored at the first label. Throws DensityError for non-dense A.
std::optional<Witness> diag_similar_up_to_transposition(const SkewMatrix& a, const SkewMatrix& b);

/// Dense skew-symmetric matrices whose principal minors of order <= 4
/// match `table` (and every higher-order entry the table carries), with the
/// first row fixed to canonical square roots. Solutions come out in
/// search order (+1 before -1, lexicographic pairs).
///
/// Throws DomainError (max_order < 4), InconsistencyError (odd-order entry
/// nonzero, or no consistent sign assignment; carries the violated subset),
/// DensityError (zero order-2 minor), FieldError (order-2 minor not a square).
std::vector<SkewMatrix> reconstruct_from_minors(const MinorTable& table, const FieldSpec& spec);

}  // namespace skewminor
