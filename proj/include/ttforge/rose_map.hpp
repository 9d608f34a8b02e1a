#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ttforge/words.hpp"

namespace ttf {

class RoseMap {
 public:
  RoseMap() = default;
  // images[k-1] is the image of E_k; must be nonempty and reduced
  RoseMap(int rank, std::vector<Word> images);

  static RoseMap identity(int rank);
  // oriented edge j maps to i j, everything else fixed
  static RoseMap fold(int rank, Dir j, Dir i);

  int rank() const { return rank_; }
  const Word& image(int edge) const { return images_[edge - 1]; }
  Word image_of(Dir d) const;
  Dir first(Dir d) const;
  const std::vector<Word>& images() const { return images_; }
  bool operator==(const RoseMap& o) const { return rank_ == o.rank_ && images_ == o.images_; }

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

Word apply(const RoseMap& g, const Word& w);
RoseMap compose(const RoseMap& outer, const RoseMap& inner);
RoseMap power(const RoseMap& g, int p);

// indexed by dir_index
using DirectionMap = std::vector<Dir>;
DirectionMap direction_map(const RoseMap& g);
Dir dmap(const DirectionMap& D, Dir d);
DirectionMap compose_dmaps(const DirectionMap& outer, const DirectionMap& inner);

std::set<Turn> illegal_turns(const DirectionMap& D);
std::vector<bool> periodic_directions(const DirectionMap& D);  // by dir_index

struct TurnClassification {
  int rank = 0;
  std::set<Turn> illegal;
  std::vector<bool> periodic;  // by dir_index
  std::vector<bool> fixed;
  bool is_illegal(const Turn& t) const { return illegal.count(t) > 0; }
};
TurnClassification classify(const RoseMap& g);

struct TrainTrackCheck {
  bool ok = true;
  int edge = 0;
  Turn turn;
};
TrainTrackCheck is_train_track(const RoseMap& g);

using Matrix = std::vector<std::vector<long long>>;
Matrix transition_matrix(const RoseMap& g);
Matrix multiply(const Matrix& a, const Matrix& b);
bool is_irreducible(const Matrix& m);
// smallest k with M^k > 0, if any
std::optional<int> primitive_exponent(const Matrix& m);
bool is_primitive(const Matrix& m);

}  // namespace ttf
