#include "fractalseq/construction.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fractalseq {

char branch_digit(Branch b) { return b == Branch::OneFirst ? '0' : '1'; }

std::string branch_string(const std::vector<Branch>& branches) {
  std::string out;
  for (Branch b : branches) out += branch_digit(b);
  return out;
}

std::vector<Branch> parse_branches(const std::string& text) {
  std::vector<Branch> out;
  for (char c : text) {
    if (c == '0') out.push_back(Branch::OneFirst);
    else if (c == '1') out.push_back(Branch::FreshFirst);
    else if (c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      throw DomainError("branch choices must be 0 or 1, got '" + text + "'");
    }
  }
  return out;
}

ConstructionError::ConstructionError(std::size_t step, std::size_t index, const std::string& what)
    : std::runtime_error("block " + std::to_string(step) + (index ? ", index " + std::to_string(index) : "") +
                         ": " + what),
      step_(step),
      index_(index) {}

Sequence MergePlan::truncated() const {
  Sequence out;
  for (Term v : merged) {
    if (v == 1) break;
    out.push_back(v);
  }
  return out;
}

MergePlan analyze_merge(const Sequence& t, const Sequence& t_prime) {
  MergePlan plan;
  plan.t = t;
  plan.t_prime = t_prime;

  const auto& tp = t_prime.vector();
  if (std::count(tp.begin(), tp.end(), Term{1}) != 1) {
    throw DomainError("t' must contain exactly one 1: " + to_string(t_prime));
  }
  plan.pos_one = static_cast<std::size_t>(std::find(tp.begin(), tp.end(), Term{1}) - tp.begin()) + 1;
  std::vector<Term> common = tp;
  common.erase(common.begin() + static_cast<std::ptrdiff_t>(plan.pos_one - 1));

  const auto& tv = t.vector();
  if (tv.size() != common.size() + 1) {
    throw DomainError("t and t' differ in more than one special element: t=" + to_string(t) +
                      " t'=" + to_string(t_prime));
  }
  std::size_t k = 0;
  while (k < common.size() && tv[k] == common[k]) ++k;
  if (!std::equal(common.begin() + static_cast<std::ptrdiff_t>(k), common.end(),
                  tv.begin() + static_cast<std::ptrdiff_t>(k + 1))) {
    throw DomainError("t and t' differ in more than one special element: t=" + to_string(t) +
                      " t'=" + to_string(t_prime));
  }
  plan.special = tv[k];
  plan.pos_special = k + 1;
  if (plan.special == 1 || std::count(tv.begin(), tv.end(), plan.special) != 1) {
    throw DomainError("special element of t is not unique: " + to_string(t));
  }
  return plan;
}

MergePlan merge_P(const Sequence& t, const Sequence& t_prime, std::optional<Branch> branch) {
  MergePlan plan = analyze_merge(t, t_prime);
  if (plan.coincident() && !branch) {
    throw DomainError("1 and " + std::to_string(plan.special) + " share a slot; a branch choice is required");
  }
  if (!plan.coincident() && branch) {
    throw DomainError("merge of t=" + to_string(t) + " and t'=" + to_string(t_prime) +
                      " is unambiguous; no branch choice expected");
  }
  plan.branch = branch;

  // Slot k sits before common[k]; slot m is the end.
  std::vector<Term> common = t_prime.vector();
  common.erase(common.begin() + static_cast<std::ptrdiff_t>(plan.pos_one - 1));
  const std::size_t slot_special = plan.pos_special - 1;
  const std::size_t slot_one = plan.pos_one - 1;

  std::vector<Term> merged;
  std::size_t idx_one = 0;
  std::size_t idx_special = 0;
  auto put_one = [&] {
    merged.push_back(1);
    idx_one = merged.size();
  };
  auto put_special = [&] {
    merged.push_back(plan.special);
    idx_special = merged.size();
  };
  for (std::size_t k = 0; k <= common.size(); ++k) {
    if (k == slot_special && k == slot_one) {
      if (*branch == Branch::OneFirst) {
        put_one();
        put_special();
      } else {
        put_special();
        put_one();
      }
    } else if (k == slot_special) {
      put_special();
    } else if (k == slot_one) {
      put_one();
    }
    if (k < common.size()) merged.push_back(common[k]);
  }
  plan.merged = Sequence(std::move(merged));
  plan.offset = static_cast<long long>(idx_one) - static_cast<long long>(idx_special);
  return plan;
}

namespace {

void validate(const ConstructionState& state, std::size_t step) {
  const FractalReport report = check_doubly_fractal_prefix(state.seq());
  if (!report.ok()) {
    throw ConstructionError(step, *report.first_violation_index,
                            std::string("result is not a doubly fractal prefix (") +
                                (report.upper_ok ? "lower" : "upper") + " trim departs)");
  }
}

std::size_t require_occurrence(const ConstructionState& state, Term value, std::size_t k) {
  if (k == 0) throw ConstructionError(state.blocks() + 1, 0, "occurrence rank 0 requested");
  auto idx = occurrence_index(state.seq(), value, k);
  if (!idx) {
    throw ConstructionError(state.blocks() + 1, 0,
                            "missing occurrence " + std::to_string(k) + " of " + std::to_string(value));
  }
  return *idx;
}

}  // namespace

ConstructionState init_type1(Term n) {
  if (n < 2) throw DomainError("type-1 construction needs n >= 2, got " + std::to_string(n));
  ConstructionState s;
  s.n_ = n;
  for (Term m = 1; m <= n; ++m) s.seq_.push_back(m);
  s.block_starts_ = {1};
  s.fresh_ = n + 1;
  return s;
}

ConstructionState extend_second_block(const ConstructionState& state) {
  if (state.blocks() != 1 || state.seq().size() != static_cast<std::size_t>(state.n())) {
    throw ConstructionError(2, 0, "second block can only extend the bare initial segment");
  }
  ConstructionState s = state;
  s.block_starts_.push_back(s.seq_.size() + 1);
  for (Term m = 1; m < s.n_; ++m) {
    s.seq_.push_back(m);
    s.seq_.push_back(s.fresh_++);
  }
  s.seq_.push_back(s.n_);
  validate(s, 2);
  return s;
}

Sequence extract_t(const ConstructionState& state) {
  const std::size_t k = state.blocks();
  if (k < 2) throw ConstructionError(k + 1, 0, "t needs at least two blocks");
  const std::size_t from = require_occurrence(state, state.n() - 1, k);
  const std::size_t to = require_occurrence(state, state.n(), k);
  if (from >= to) throw ConstructionError(k + 1, from, "n-1 does not precede n in the last block");
  Sequence t;
  for (Term v : state.seq().slice(from + 1, to - 1)) t.push_back(v + 1);
  return t;
}

Sequence extract_t_prime(const ConstructionState& state) {
  const std::size_t k = state.blocks();
  if (k < 2) throw ConstructionError(k + 1, 0, "t' needs at least two blocks");
  const std::size_t from = require_occurrence(state, state.n(), k - 1);
  const std::size_t to = require_occurrence(state, state.n() + 1, k - 1);
  if (from >= to) throw ConstructionError(k + 1, from, "n+1 does not follow the previous block's n");
  return state.seq().slice(from + 1, to - 1);
}

bool next_step_forks(const ConstructionState& state) {
  if (state.blocks() < 2) return false;
  return analyze_merge(extract_t(state), extract_t_prime(state)).coincident();
}

ConstructionState extend_next_block(const ConstructionState& state, std::optional<Branch> branch) {
  const std::size_t k = state.blocks();
  const std::size_t step = k + 1;
  if (k < 2) throw ConstructionError(step, 0, "extend_second_block must run first");

  MergePlan plan;
  try {
    plan = merge_P(extract_t(state), extract_t_prime(state), branch);
  } catch (const DomainError& e) {
    throw ConstructionError(step, 0, e.what());
  }

  ConstructionState s = state;
  const std::size_t block_first = s.block_starts_.back();
  const std::size_t block_last = require_occurrence(s, s.n_, k);
  const Sequence old_block = s.seq_.slice(block_first, block_last);
  const std::size_t len = old_block.size();

  s.seq_.append(plan.truncated());
  s.fresh_ = s.seq_.max_value() + 1;

  // A fresh value goes into gap g (after old-block position g) for each main
  // term m at position p with g = p - d, counted so that it lands |d| terms
  // after m (d < 0) or d terms before m (d > 0). Gaps outside the span from
  // the leading 1 to the final n are skipped.
  const long long d = plan.offset;
  std::set<std::size_t> gaps;
  for (std::size_t p = 1; p <= len; ++p) {
    const Term v = old_block.at(p);
    if (v < 1 || v > s.n_) continue;
    const long long g = d < 0 ? static_cast<long long>(p) - d - 1 : static_cast<long long>(p) - d;
    if (g >= 1 && g <= static_cast<long long>(len) - 1) gaps.insert(static_cast<std::size_t>(g));
  }

  s.block_starts_.push_back(s.seq_.size() + 1);
  for (std::size_t p = 1; p <= len; ++p) {
    s.seq_.push_back(old_block.at(p));
    if (gaps.count(p)) s.seq_.push_back(s.fresh_++);
  }

  if (plan.coincident()) s.branch_log_.push_back(*branch);
  s.merges_.push_back(std::move(plan));
  validate(s, step);
  return s;
}

namespace {

class PolicyCursor {
 public:
  explicit PolicyCursor(const BranchPolicy& policy) : policy_(policy) {}

  Branch take() {
    if (const auto* fixed = std::get_if<Branch>(&policy_)) return *fixed;
    const auto& list = std::get<ExplicitBranches>(policy_).choices;
    return used_ < list.size() ? list[used_++] : Branch::OneFirst;
  }

  [[nodiscard]] std::size_t unused() const {
    if (const auto* list = std::get_if<ExplicitBranches>(&policy_)) return list->choices.size() - used_;
    return 0;
  }

 private:
  const BranchPolicy& policy_;
  std::size_t used_ = 0;
};

ConstructionState step_with(const ConstructionState& state, PolicyCursor& cursor) {
  if (state.blocks() == 1) return extend_second_block(state);
  const bool fork = next_step_forks(state);
  return extend_next_block(state, fork ? std::optional<Branch>(cursor.take()) : std::nullopt);
}

void enumerate(const ConstructionState& state, std::size_t blocks, std::vector<Constructed>& out) {
  if (state.blocks() >= blocks) {
    out.push_back({state.branch_log(), state});
    return;
  }
  if (state.blocks() == 1) {
    enumerate(extend_second_block(state), blocks, out);
    return;
  }
  if (next_step_forks(state)) {
    enumerate(extend_next_block(state, Branch::OneFirst), blocks, out);
    enumerate(extend_next_block(state, Branch::FreshFirst), blocks, out);
  } else {
    enumerate(extend_next_block(state, std::nullopt), blocks, out);
  }
}

}  // namespace

std::vector<Constructed> construct_type1(Term n, std::size_t blocks, const BranchPolicy& policy) {
  if (blocks == 0) throw DomainError("block count must be positive");
  ConstructionState state = init_type1(n);
  std::vector<Constructed> out;
  if (std::holds_alternative<AllBranches>(policy)) {
    enumerate(state, blocks, out);
    return out;
  }
  PolicyCursor cursor(policy);
  while (state.blocks() < blocks) state = step_with(state, cursor);
  if (cursor.unused() != 0) {
    throw DomainError(std::to_string(cursor.unused()) + " branch choice(s) left unused; only " +
                      std::to_string(state.branch_log().size()) + " fork(s) occurred");
  }
  out.push_back({state.branch_log(), std::move(state)});
  return out;
}

ConstructionState construct_type1_single(Term n, std::size_t blocks, const BranchPolicy& policy) {
  if (std::holds_alternative<AllBranches>(policy)) throw DomainError("a single outcome needs a fixed branch policy");
  return std::move(construct_type1(n, blocks, policy).front().state);
}

Sequence rank_stream(const Sequence& s) {
  std::vector<Term> ranks;
  ranks.reserve(s.size());
  for (const auto& t : annotate_ranks(s)) ranks.push_back(t.rank);
  return Sequence(std::move(ranks));
}

Sequence translate_type2(Term n, std::size_t length, const BranchPolicy& policy) {
  if (std::holds_alternative<AllBranches>(policy)) throw DomainError("type-2 translation needs a fixed branch policy");
  ConstructionState state = init_type1(n);
  PolicyCursor cursor(policy);
  while (state.seq().size() < length) state = step_with(state, cursor);
  return rank_stream(state.seq().prefix(length));
}

std::optional<Sequence> part(const Sequence& s, Term n, std::size_t k) {
  const auto from = occurrence_index(s, n, k);
  const auto to = occurrence_index(s, n, k + 1);
  if (!from || !to) return std::nullopt;
  return s.slice(*from, *to - 1);
}

Sequence upper_trim_window(const Sequence& s, std::size_t first, std::size_t last) {
  std::vector<bool> seen(static_cast<std::size_t>(s.max_value()) + 1, false);
  Sequence out;
  for (std::size_t i = 1; i <= s.size() && i <= last; ++i) {
    const Term v = s.at(i);
    const bool first_occurrence = !seen[static_cast<std::size_t>(v)];
    seen[static_cast<std::size_t>(v)] = true;
    if (i >= first && !first_occurrence) out.push_back(v);
  }
  return out;
}

}  // namespace fractalseq
