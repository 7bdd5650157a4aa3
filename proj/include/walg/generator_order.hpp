#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace walg {

struct GenIdx {
  int i = 1, j = 1;
  bool operator==(const GenIdx&) const = default;
  auto operator<=>(const GenIdx&) const = default;
  std::string to_string() const;
};

using Rank = std::uint8_t;
constexpr int kMaxN = 15;  // N^2 ranks must fit below 255

// Total order on the matrix units of gl_N. Rank 0 is the smallest letter.
class GeneratorOrder {
 public:
  static std::shared_ptr<const GeneratorOrder> from_sequence(int N, const std::vector<GenIdx>& seq);
  static std::shared_ptr<const GeneratorOrder> lexicographic(int N);

  int N() const { return N_; }
  int size() const { return N_ * N_; }
  Rank rank(int i, int j) const { return rank_[(i - 1) * N_ + (j - 1)]; }
  Rank rank(GenIdx g) const { return rank(g.i, g.j); }
  GenIdx gen(Rank r) const { return gen_[r]; }
  const std::vector<GenIdx>& sequence() const { return gen_; }

  // [gen(a), gen(b)] = sum coeff * gen(rank); at most two terms
  struct BracketTerm {
    Rank r;
    int c;
  };
  const std::vector<BracketTerm>& bracket(Rank a, Rank b) const { return br_[a * size() + b]; }

  std::uint32_t id() const { return id_; }
  std::string fingerprint() const;  // stable textual hash of the rank table
  bool same_as(const GeneratorOrder& o) const { return N_ == o.N_ && gen_ == o.gen_; }

 private:
  GeneratorOrder() = default;
  int N_ = 0;
  std::vector<Rank> rank_;
  std::vector<GenIdx> gen_;
  std::vector<std::vector<BracketTerm>> br_;
  std::uint32_t id_ = 0;
};

using OrderPtr = std::shared_ptr<const GeneratorOrder>;

}  // namespace walg
