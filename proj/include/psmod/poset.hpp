#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psmod/errors.hpp"
#include "psmod/rng.hpp"

namespace psmod {

// A finite poset presented by its Hasse diagram.  Validation guarantees the
// edge set is acyclic, transitively reduced, and connects the objects (as an
// undirected graph).  The partial order is the reflexive-transitive closure.
class PosetCategory {
 public:
  static PosetCategory from_hasse(
      std::vector<std::string> objects,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& name(std::size_t i) const { return objects_[i]; }
  std::size_t index(const std::string& name) const;
  bool has_object(const std::string& name) const { return index_.count(name) > 0; }

  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }

  // Deterministic linear extension (Kahn's algorithm, declared order breaking
  // ties).
  std::vector<std::size_t> topo_order() const;

  // All ordered pairs (a, b) with a <= b, including a == b, in declared order.
  std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs() const;

  std::vector<std::size_t> minimal_objects() const;
  std::vector<std::size_t> hasse_out(std::size_t v) const;  // edge indices leaving v
  std::vector<std::size_t> hasse_in(std::size_t v) const;   // edge indices entering v

  bool same_category(const PosetCategory& o) const {
    return objects_ == o.objects_ && hasse_ == o.hasse_;
  }

 private:
  std::vector<std::string> objects_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<bool>> leq_;
};

// A full subcategory, identified by its object subset (sorted indices).
struct Subcategory {
  const PosetCategory* parent = nullptr;
  std::vector<std::size_t> objects;

  bool contains(std::size_t v) const;
};

Subcategory make_subcategory(const PosetCategory& c, const std::vector<std::string>& names);
Subcategory subcategory_from_indices(const PosetCategory& c, std::vector<std::size_t> idx);

// Admissible = induced Hasse graph connected (undirected) and order-convex.
// Order-convexity makes every directed path between members stay inside, so
// this is exactly pathwise fullness plus connectivity.
bool is_admissible(const Subcategory& s);

enum class StepDir { Forward, Backward };

// A closed zig-zag walk: each step travels one Hasse edge, either along its
// direction or against it.  Consecutive steps share endpoints; the walk ends
// where it starts.
struct ZigZagLoop {
  std::vector<std::pair<std::size_t, StepDir>> steps;
};

// Vertices visited by the loop, one per step, starting at the base vertex.
std::vector<std::size_t> loop_vertices(const PosetCategory& c, const ZigZagLoop& loop);

// Number of maximal same-direction runs in the cyclic step sequence.
std::size_t zigzag_length(const ZigZagLoop& loop);

// Fundamental cycles of the underlying undirected graph (one per non-tree
// edge of a breadth-first spanning tree); empty iff the graph is a tree.
std::vector<ZigZagLoop> cycle_basis(const PosetCategory& c);

// The sub-poset induced by an admissible subcategory, with translation maps
// back to the parent's object and Hasse-edge indexing.  (Convexity guarantees
// that the parent's internal Hasse edges are exactly the sub-poset's.)
struct InducedCategory {
  PosetCategory category;
  std::vector<std::size_t> to_parent_obj;   // sub object index -> parent index
  std::vector<std::size_t> to_parent_edge;  // sub edge index -> parent edge index
};
InducedCategory induced_category(const Subcategory& s);

enum class HFreeVerdict { Yes, Unknown };

struct HFreeReport {
  HFreeVerdict verdict = HFreeVerdict::Unknown;
  bool via_recognizer = false;   // matched a product-of-chains shape
  bool via_tree = false;         // no loops at all
  std::size_t rewrites_used = 0; // corner rewrites spent by the search
};

// Sound-but-incomplete check that every basis loop contracts to a two-corner
// loop by corner rewriting (replacing a valley between two peaks using a
// common upper bound, or dually).  Product-of-chains posets short-circuit to
// Yes without consuming budget.
HFreeReport strongly_h_free(const PosetCategory& c, std::size_t budget);

// Coordinates exhibiting the poset as a product of chains, when it is one.
struct ChainProductShape {
  std::vector<std::size_t> axis_lengths;         // positions per axis (>= 1)
  std::vector<std::vector<std::size_t>> coords;  // per object, per axis
};
std::optional<ChainProductShape> chain_product_coords(const PosetCategory& c);

bool is_chain(const PosetCategory& c);
// Objects in chain order; throws if not a chain.
std::vector<std::size_t> chain_order(const PosetCategory& c);

// Builders.
PosetCategory chain_poset(std::size_t n);
PosetCategory zigzag_poset(const std::string& dirs);  // 'f' = left-to-right arrow
PosetCategory product_poset(const PosetCategory& a, const PosetCategory& b);
PosetCategory grid_poset(const std::vector<std::size_t>& axis_sizes);
PosetCategory gamma2_poset();
PosetCategory random_poset(std::size_t n, Rng& rng);

}  // namespace psmod
