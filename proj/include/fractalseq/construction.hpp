#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fractalseq/sequence.hpp"

namespace fractalseq {

/// Order of 1 and the fresh value when both land on the same merge slot.
enum class Branch { OneFirst, FreshFirst };

char branch_digit(Branch b);
std::string branch_string(const std::vector<Branch>& branches);
/// Accepts "0,1", "01" or "0 1"; throws DomainError on anything else.
std::vector<Branch> parse_branches(const std::string& text);

/// The block-extension procedure produced something inconsistent. Carries
/// the step (number of the block being written) and the offending index.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::size_t step, std::size_t index, const std::string& what);
  [[nodiscard]] std::size_t step() const noexcept { return step_; }
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t step_;
  std::size_t index_;
};

/// Merge of the two extraction sequences t and t'.
///
/// t and t' agree once the special element of t (the fresh-class value)
/// and the single 1 of t' are removed. `merged` keeps that common part in
/// order and places both special elements at their own slots.
struct MergePlan {
  Sequence t;
  Sequence t_prime;
  Term special = 0;            // the element of t absent from t'
  std::size_t pos_special = 0; // 1-based position in t
  std::size_t pos_one = 0;     // 1-based position of 1 in t'
  Sequence merged;
  long long offset = 0;        // index of 1 in merged minus index of special
  std::optional<Branch> branch;

  /// Both special elements go into the same slot of the common part.
  [[nodiscard]] bool coincident() const noexcept { return pos_special == pos_one; }
  /// Terms of `merged` before its 1.
  [[nodiscard]] Sequence truncated() const;
};

/// Validates the t/t' structure and reports where the special elements sit.
/// `merged` and `offset` are left empty. Throws DomainError on violations.
MergePlan analyze_merge(const Sequence& t, const Sequence& t_prime);

/// Full merge. `branch` must be given exactly when the slots coincide.
MergePlan merge_P(const Sequence& t, const Sequence& t_prime, std::optional<Branch> branch);

class ConstructionState {
 public:
  [[nodiscard]] Term n() const noexcept { return n_; }
  [[nodiscard]] const Sequence& seq() const noexcept { return seq_; }
  /// 1-based indices of each block's leading 1.
  [[nodiscard]] const std::vector<std::size_t>& block_starts() const noexcept { return block_starts_; }
  [[nodiscard]] std::size_t blocks() const noexcept { return block_starts_.size(); }
  /// Least positive integer not yet used.
  [[nodiscard]] Term fresh() const noexcept { return fresh_; }
  [[nodiscard]] const std::vector<Branch>& branch_log() const noexcept { return branch_log_; }
  /// One plan per block written from the third on.
  [[nodiscard]] const std::vector<MergePlan>& merges() const noexcept { return merges_; }

 private:
  Term n_ = 0;
  Sequence seq_;
  std::vector<std::size_t> block_starts_;
  Term fresh_ = 1;
  std::vector<Branch> branch_log_;
  std::vector<MergePlan> merges_;

  friend ConstructionState init_type1(Term n);
  friend ConstructionState extend_second_block(const ConstructionState& state);
  friend ConstructionState extend_next_block(const ConstructionState& state, std::optional<Branch> branch);
};

ConstructionState init_type1(Term n);
ConstructionState extend_second_block(const ConstructionState& state);

/// Terms strictly between the latest n-1 and the following n, plus one.
Sequence extract_t(const ConstructionState& state);
/// Terms strictly between the previous block-final n and the latest n+1.
Sequence extract_t_prime(const ConstructionState& state);

/// True when the next extension step is a two-way fork.
bool next_step_forks(const ConstructionState& state);

/// Writes one more block. Throws ConstructionError if the result is not a
/// doubly fractal prefix.
ConstructionState extend_next_block(const ConstructionState& state, std::optional<Branch> branch);

/// Choices consumed in fork order. When the list runs out, OneFirst is used.
struct ExplicitBranches {
  std::vector<Branch> choices;
};
struct AllBranches {};
using BranchPolicy = std::variant<Branch, ExplicitBranches, AllBranches>;

struct Constructed {
  std::vector<Branch> branches;
  ConstructionState state;
};

/// Builds `blocks` blocks with main terms 1..n. With AllBranches, returns
/// every outcome in lexicographic branch order; otherwise exactly one.
std::vector<Constructed> construct_type1(Term n, std::size_t blocks, const BranchPolicy& policy);

/// Convenience: single outcome for a fixed or explicit policy.
ConstructionState construct_type1_single(Term n, std::size_t blocks, const BranchPolicy& policy);

/// Type-2 sequence (1 x n, 2, ...) of the given length: the occurrence-rank
/// stream of the type-1 sequence with main terms 1..n under `policy`.
Sequence translate_type2(Term n, std::size_t length, const BranchPolicy& policy);

/// Rank stream of a sequence: term k becomes the number of times s_k occurs
/// among s_1..s_k.
Sequence rank_stream(const Sequence& s);

/// Part k: the terms from the k-th n up to just before the (k+1)-st n.
std::optional<Sequence> part(const Sequence& s, Term n, std::size_t k);

/// Removes from positions first..last (1-based, inclusive) every term that is
/// a first occurrence in the whole of s.
Sequence upper_trim_window(const Sequence& s, std::size_t first, std::size_t last);

}  // namespace fractalseq
