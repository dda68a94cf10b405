#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tourn {

/// Word-parallel vertex subset. Size is always the vertex count of the
/// owning tournament.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_set(int n, std::span<const int> members) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : members) s.set(static_cast<std::size_t>(v));
  return s;
}

inline VertexSet make_set(int n, std::initializer_list<int> members) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : members) s.set(static_cast<std::size_t>(v));
  return s;
}

inline std::vector<int> members(const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

template <class F>
void for_each_member(const VertexSet& s, F&& f) {
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
    f(static_cast<int>(i));
}

}  // namespace tourn
