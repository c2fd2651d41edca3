#ifndef EQUIGAME_STREAM_HPP
#define EQUIGAME_STREAM_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace equigame::coalg {

// Coalgebra for Str(X) = N x X: an observation (head) plus a successor
// state (tail). Unfolding yields the unique map into the stream of naturals.
template <class State>
struct StreamCoalgebra {
  std::function<long(const State&)> observe;
  std::function<State(const State&)> next;
};

// First k observations along the orbit of x0.
template <class State>
std::vector<long> unfold_stream(const StreamCoalgebra<State>& c, State x0, int k) {
  if (k < 0) throw std::invalid_argument("unfold_stream: k must be >= 0");
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(k));
  State x = std::move(x0);
  for (int i = 0; i < k; ++i) {
    out.push_back(c.observe(x));
    x = c.next(x);
  }
  return out;
}

}  // namespace equigame::coalg

#endif
