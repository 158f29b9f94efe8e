#pragma once

#include "dbgsr/word.hpp"

namespace dbgsr {

/// Whether a public entry point re-validates its preconditions. Correctness
/// tests use `validate`; hot loops and benchmarks use `trust`.
enum class Checking { validate, trust };

/// Next Lyndon word of length <= n in lexicographic order (Duval's step):
/// repeat L to length n, drop the trailing run of k-1, bump the last symbol.
Word duval_next(WordView lyndon, const Params& p, Checking checking = Checking::validate);

/// Smallest Lyndon word greater than `lyndon` whose length divides n; wraps
/// from the single symbol k-1 back to 0. O(n).
Word lnext(WordView lyndon, const Params& p, Checking checking = Checking::validate);

namespace detail {

/// duval_next on a buffer, in place. `x` must be a Lyndon word other than
/// k-1 with |x| <= n.
void duval_step(Word& x, const Params& p);

/// lnext on a buffer, in place and without validation. Capacity n suffices.
void lnext_in_place(Word& x, const Params& p);

}  // namespace detail

}  // namespace dbgsr
