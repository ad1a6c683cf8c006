#pragma once

// Root systems A1, C4, D4, D8, E8 in simple-root coordinates (Bourbaki
// numbering) and the coroot embedding tables between them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace e8kit {

enum class SystemLabel { A1, C4, D4, D8, E8 };

std::string_view to_string(SystemLabel label);

using IVec = std::vector<std::int64_t>;

class RootSystem {
 public:
  explicit RootSystem(SystemLabel label);

  SystemLabel label() const { return label_; }
  std::size_t rank() const { return rank_; }
  bool simply_laced() const { return label_ != SystemLabel::C4; }

  /// a(i,j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Symmetrized form on simple roots; long roots have squared length 2.
  const std::vector<std::vector<mpq_class>>& gram() const { return gram_; }

  /// All roots, sorted lexicographically.
  const std::vector<IVec>& roots() const { return roots_; }
  std::vector<IVec> positive_roots() const;
  IVec simple_root(std::size_t i) const;

  bool is_root(const IVec& v) const { return index_.count(v) != 0; }
  std::optional<std::size_t> index_of(const IVec& v) const;

  /// Symmetrized pairing of two lattice vectors.
  mpq_class pairing(const IVec& v, const IVec& w) const;
  mpq_class lengthsq(const IVec& v) const { return pairing(v, v); }

  /// Pairing of coroot lattice vectors given in simple-coroot coordinates.
  mpq_class coroot_pairing(const IVec& v, const IVec& w) const;

 private:
  SystemLabel label_;
  std::size_t rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<mpq_class>> gram_;
  std::vector<IVec> roots_;
  std::map<IVec, std::size_t> index_;
};

RootSystem build_root_system(SystemLabel label);

std::int64_t height(const IVec& v);

/// The unique root that dominates every other root.
IVec highest_root(const RootSystem& rs);

/// One component of the source of a coroot map, with the factor by which
/// its coroot pairing is scaled in the target (the Dynkin index).
struct MapComponent {
  SystemLabel source;
  mpq_class multiplier;
};

struct CorootRow {
  std::string label;
  std::size_t component = 0;
  IVec source;  ///< simple-coroot coordinates in the source component
  IVec image;   ///< simple-root coordinates in the target
};

struct CorootMap {
  std::string name;
  SystemLabel target;
  std::vector<MapComponent> components;
  std::vector<CorootRow> rows;

  const CorootRow& row(std::string_view label) const;
};

enum class EmbeddingTable { D8_in_E8, A1C4_in_D8, A1C4_in_E8, PGL2x4_in_E8 };

std::string_view to_string(EmbeddingTable t);
CorootMap embedding_table(EmbeddingTable t);

/// The four A1 coroots of the PGL2^4 inclusion written in C4 coroot
/// coordinates (the first row lies in the separate A1 factor instead).
std::vector<CorootRow> pgl2x4_via_c4();

/// Images of each row of `inner` pushed through `outer`, whose rows must be
/// the simple coroots of inner's target.
CorootMap compose(const CorootMap& inner, const CorootMap& outer);

struct PairingCheck {
  std::string first;
  std::string second;
  mpq_class expected;
  mpq_class actual;
  bool ok() const { return expected == actual; }
};

struct EmbeddingReport {
  std::vector<PairingCheck> pairs;
  std::vector<std::string> bad_images;  ///< rows whose image has the wrong length
  std::size_t mismatches() const;
  bool ok() const { return mismatches() == 0 && bad_images.empty(); }
};

EmbeddingReport verify_embedding(const CorootMap& map);

/// Half the squared length of the image of the shortest simple coroot of
/// the given component.
mpq_class rost_multiplier(const CorootMap& map, std::size_t component = 0);

struct Subsystem {
  std::vector<IVec> roots;   ///< in the ambient simple-root coordinates
  std::vector<IVec> simple;  ///< lexicographic order
  std::vector<std::vector<int>> cartan;
  std::string type;          ///< e.g. "D4", "A1+A1"
  IVec highest;              ///< root of maximal ambient height
};

/// Roots of rs orthogonal to every given vector, with a simple system.
Subsystem centralizer_roots(const RootSystem& rs, const std::vector<IVec>& coweights);

/// The simple roots phi_1..phi_4 of the centralizer of the C4 coroot images,
/// as tabulated (E8 simple-root coordinates).
std::vector<IVec> c4_centralizer_table();

/// Simple system of a closed subsystem: its ambient-positive roots that are
/// not sums of two ambient-positive subsystem roots.
std::vector<IVec> simple_system(const std::vector<IVec>& roots);

/// Dynkin type of a simply-laced Cartan matrix, components joined by '+'.
std::string recognize_type(const std::vector<std::vector<int>>& cartan);

/// Coefficients of v in a basis of lattice vectors, via the pairing of rs.
std::vector<mpq_class> coordinates_in(const RootSystem& rs, const std::vector<IVec>& basis, const IVec& v);

std::string format_vector(const IVec& v);

}  // namespace e8kit
