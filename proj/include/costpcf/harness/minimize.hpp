#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "costpcf/term.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf::harness {

/// Sizes of the accepted candidates, in order.
using ShrinkLog = std::vector<std::size_t>;

/// Strictly smaller variants of `t`: a subterm replaced by one of its own
/// subterms, by a trivial constant, or a numeral decremented.
std::vector<TermPtr> shrink_candidates(const TermPtr& t);

/// Greedy shrinking. A candidate is accepted when it keeps the
/// classification of `t` in `ctx` and `fails` still holds for it. Returns `t`
/// unchanged when `fails(t)` is false.
TermPtr minimize(const TermPtr& t, const Context& ctx,
                 const std::function<bool(const TermPtr&)>& fails, ShrinkLog* log = nullptr);

/// Shrinks each component of a tuple in turn; component i keeps its
/// classification in `ctxs[i]`.
std::vector<TermPtr> minimize(const std::vector<TermPtr>& parts,
                              const std::vector<Context>& ctxs,
                              const std::function<bool(const std::vector<TermPtr>&)>& fails,
                              ShrinkLog* log = nullptr);

}  // namespace costpcf::harness
