#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "weylwords/error.hpp"
#include "weylwords/verify.hpp"

namespace weylwords {

namespace {

struct EntriesHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

}  // namespace

std::map<Root, int> small_group_oracle(const RootSystem& sys, unsigned long long max_order) {
  const unsigned long long order = weyl_group_order(sys.label());
  if (order == 0 || order > max_order) {
    throw Error(ErrorCode::GroupTooLarge, sys.label().str() + " has order " +
                                              (order ? std::to_string(order) : "> 2^64") +
                                              ", bound " + std::to_string(max_order));
  }

  std::vector<WeylMatrix> gens;
  for (int i = 1; i <= sys.rank(); ++i) gens.push_back(simple_matrix(sys, i));

  // Elements are identified by their matrix entries; depth is the true length.
  std::unordered_map<std::vector<int>, int, EntriesHash> depth;
  std::vector<WeylMatrix> frontier{WeylMatrix::identity(sys.rank())};
  depth.emplace(frontier.front().entries().entries(), 0);
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<WeylMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        WeylMatrix p = m * g;
        if (depth.emplace(p.entries().entries(), d).second) next.push_back(std::move(p));
      }
    if (depth.size() > max_order) {
      throw Error(ErrorCode::GroupTooLarge, "enumeration exceeded " + std::to_string(max_order));
    }
    frontier = std::move(next);
  }

  std::map<Root, int> out;
  for (const auto& a : sys.positives())
    out.emplace(a, depth.at(reflection_matrix(sys, a).entries().entries()));
  return out;
}

}  // namespace weylwords
