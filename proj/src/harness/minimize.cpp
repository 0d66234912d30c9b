#include "costpcf/harness/minimize.hpp"

#include <optional>

namespace costpcf::harness {

namespace {

const std::vector<TermPtr>& constants() {
  static const std::vector<TermPtr> cs = {
      mk::triv(), mk::zero(), mk::yes(), mk::ret(mk::triv()), mk::ret(mk::zero()),
      mk::ret(mk::yes())};
  return cs;
}

void collect(const TermPtr& t, std::vector<TermPtr>& out) {
  auto kids = children(t);
  // Hoist a child into its parent's place when it does not mention the
  // binders it sits under.
  for (const auto& [kid, binders] : kids) {
    TermPtr lowered = kid;
    for (std::size_t b = 0; b < binders; ++b) lowered = subst(lowered, mk::triv(), 0);
    if (binders == 0 || equal(shift(lowered, binders, 0), kid)) out.push_back(lowered);
  }
  if (t->size() > 1) {
    for (const auto& c : constants()) out.push_back(c);
  }
  if (const auto* s = t->as<node::Step>()) out.push_back(s->body);

  // Candidates that change a single child.
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<TermPtr> sub;
    collect(kids[i].first, sub);
    for (auto& c : sub) {
      std::vector<TermPtr> replaced;
      for (const auto& k : kids) replaced.push_back(k.first);
      replaced[i] = std::move(c);
      out.push_back(with_children(t, replaced));
    }
  }
}

}  // namespace

std::vector<TermPtr> shrink_candidates(const TermPtr& t) {
  std::vector<TermPtr> raw;
  collect(t, raw);
  std::vector<TermPtr> out;
  for (auto& c : raw) {
    if (c->size() < t->size()) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::optional<Classification> classify(const Context& ctx, const TermPtr& t) {
  try {
    return infer(ctx, t);
  } catch (const TypeError&) {
    return std::nullopt;
  }
}

}  // namespace

TermPtr minimize(const TermPtr& t, const Context& ctx,
                 const std::function<bool(const TermPtr&)>& fails, ShrinkLog* log) {
  if (!fails(t)) return t;
  auto want = classify(ctx, t);
  TermPtr cur = t;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& c : shrink_candidates(cur)) {
      if (c->free_bound() > ctx.size()) continue;
      if (classify(ctx, c) != want) continue;
      if (!fails(c)) continue;
      cur = c;
      if (log) log->push_back(cur->size());
      progress = true;
      break;
    }
  }
  return cur;
}

std::vector<TermPtr> minimize(const std::vector<TermPtr>& parts,
                              const std::vector<Context>& ctxs,
                              const std::function<bool(const std::vector<TermPtr>&)>& fails,
                              ShrinkLog* log) {
  if (!fails(parts)) return parts;
  auto cur = parts;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    cur[i] = minimize(
        cur[i], ctxs.at(i),
        [&](const TermPtr& c) {
          auto trial = cur;
          trial[i] = c;
          return fails(trial);
        },
        log);
  }
  return cur;
}

}  // namespace costpcf::harness
