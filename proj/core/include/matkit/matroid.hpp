#ifndef MATKIT_MATROID_HPP
#define MATKIT_MATROID_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "matkit/errors.hpp"
#include "matkit/mask.hpp"

namespace matkit {

/// An ordered ground set of distinctly labeled elements, at most 16 of them.
/// Positions (bit indices) follow the given label order; tie-breaking rules
/// elsewhere are lexicographic by label string, not by position.
class GroundSet {
  public:
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Mask full() const { return full_mask(size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int pos) const { return labels_.at(pos); }
    int position(const std::string& label) const;
    bool has_label(const std::string& label) const;

    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    /// Positions sorted by label string; drives label-lexicographic orders.
    const std::vector<int>& label_sorted_positions() const { return by_label_; }

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
    std::vector<int> by_label_;
};

struct SimplifyResult;

/// An immutable matroid value: a labeled ground set plus its set of bases.
/// Copies are cheap (shared representation); derived data such as the rank
/// table, circuits and flats is memoized behind thread-safe lazy init, so
/// values may be shared freely across threads.
class Matroid {
  public:
    /// Validates the basis family (nonempty, uniform size, exchange axiom).
    Matroid(GroundSet ground, std::vector<Mask> bases);

    /// Skips validation. For building values already known to be matroids
    /// and for fault-injection tests that need a broken basis family.
    static Matroid unchecked(GroundSet ground, std::vector<Mask> bases);

    const GroundSet& ground() const;
    int size() const;
    int rank() const;
    const std::vector<Mask>& bases() const;  // sorted ascending by mask value
    bool is_basis(Mask m) const;

    // Rank-function queries; O(1) after the first call builds the table.
    int rank(Mask x) const;
    int corank(Mask x) const;  // rank of x in the dual
    bool is_independent(Mask x) const;
    bool is_coindependent(Mask x) const;
    Mask closure(Mask x) const;
    bool is_flat(Mask x) const;
    bool spans(Mask x) const { return rank(x) == rank(); }

    const std::vector<Mask>& circuits() const;    // sorted by (size, value)
    const std::vector<Mask>& cocircuits() const;
    const std::vector<Mask>& flats() const;       // sorted by (rank, size, value)
    std::vector<Mask> flats_of_rank(int k) const;
    std::vector<Mask> hyperplanes() const;
    std::vector<Mask> points() const;  // rank-1 flats
    std::vector<Mask> lines() const;   // rank-2 flats
    std::vector<Mask> triangles() const;  // 3-element circuits
    std::vector<Mask> triads() const;     // 3-element cocircuits

    Mask loops() const;
    Mask coloops() const;
    bool is_simple() const;
    bool is_cosimple() const;
    /// Parallel classes of non-loop elements, each a mask, sorted by value.
    std::vector<Mask> parallel_classes() const;

    /// Minor operations. Deleting or contracting everything is an error.
    Matroid deletion(Mask x) const;
    Matroid contraction(Mask x) const;
    /// contraction(c) followed by deletion(d) in one step; c and d disjoint.
    Matroid minor(Mask contract, Mask del) const;
    Matroid restriction(Mask keep) const;
    Matroid dual() const;

    /// Same matroid with positions reordered: new position k holds the old
    /// element new_to_old[k], label included.
    Matroid permuted(const std::vector<int>& new_to_old) const;
    /// Same structure, fresh labels in position order.
    Matroid with_labels(std::vector<std::string> labels) const;

    /// Value equality: identical labels in identical order and identical
    /// basis sets. Isomorphism is a separate, explicit operation.
    bool operator==(const Matroid& o) const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

  private:
    explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

struct SimplifyResult {
    Matroid matroid;
    /// Every non-loop label maps to the lexicographically least label of its
    /// parallel class; representatives map to themselves.
    std::map<std::string, std::string> representative;
    std::vector<std::string> removed_loops;
};

/// Removes loops and all but the lexicographically-least member of each
/// parallel class. Throws AllLoops when nothing would remain.
SimplifyResult simplify(const Matroid& m);

/// Full axiom check used by the validating constructor and the JSON loader;
/// throws InvalidMatroid with a description of the first violation.
void validate_matroid(const GroundSet& ground, const std::vector<Mask>& bases);

}  // namespace matkit

#endif
