#ifndef RAAG_WORDS_HPP
#define RAAG_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace raag
{

/// Signed generator v^sign, sign ∈ {+1, -1}.
struct Letter
{
  Vertex vertex = 0;
  int sign = 1;

  Letter inverse() const { return {vertex, -sign}; }

  bool operator==(Letter const &) const = default;

  // Canonical letter order: by vertex, then +1 before -1.
  bool operator<(Letter const &rhs) const
  {
    if (vertex != rhs.vertex)
      return vertex < rhs.vertex;
    return sign > rhs.sign;
  }
};

using Word = std::vector<Letter>;

class NormalForm;
inline NormalForm normal_form(SimplicialGraph const &g, Word const &w);

/// Reduced word in left-greedy (lexicographically least) order. Two words
/// represent the same element of A_Γ iff their normal forms coincide.
class NormalForm
{
public:
  NormalForm() = default;

  Word const &word() const { return _letters; }
  std::size_t length() const { return _letters.size(); }
  bool is_identity() const { return _letters.empty(); }

  bool operator==(NormalForm const &) const = default;

private:
  friend NormalForm normal_form(SimplicialGraph const &, Word const &);

  explicit NormalForm(Word letters)
  : _letters(std::move(letters))
  {}

  Word _letters;
};

inline Word letter_word(Vertex v, int sign = 1) { return Word{Letter{v, sign}}; }

inline void check_word(SimplicialGraph const &g, Word const &w)
{
  for (auto const &l : w) {
    g.check_vertex(l.vertex);
    if (l.sign != 1 && l.sign != -1)
      throw precondition_error("letter exponent must be +1 or -1");
  }
}

namespace detail
{

inline bool letters_commute(SimplicialGraph const &g, Vertex a, Vertex b)
{ return a == b || g.adjacent(a, b); }

} // namespace detail

/// Deletes pairs x^e ... x^-e whose intermediate letters all commute with x
/// until none remain. The result is a geodesic representative.
inline Word reduce(SimplicialGraph const &g, Word const &w)
{
  check_word(g, w);

  // Appending a letter to a reduced word either keeps it reduced or cancels
  // against the last occurrence of its inverse that can be shuffled to the
  // end.
  Word res;
  res.reserve(w.size());
  for (auto const &l : w) {
    bool cancelled = false;
    for (std::size_t i = res.size(); i-- > 0;) {
      if (res[i].vertex == l.vertex) {
        if (res[i].sign == -l.sign) {
          res.erase(res.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
        }
        break;
      }
      if (!g.adjacent(res[i].vertex, l.vertex))
        break;
    }
    if (!cancelled)
      res.push_back(l);
  }
  return res;
}

inline NormalForm normal_form(SimplicialGraph const &g, Word const &w)
{
  Word remaining = reduce(g, w);
  Word out;
  out.reserve(remaining.size());

  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) {
        if (!detail::letters_commute(g, remaining[j].vertex,
                                     remaining[i].vertex))
          available = false;
      }
      if (available && (best == remaining.size() ||
                        remaining[i] < remaining[best]))
        best = i;
    }
    out.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }

  return NormalForm(std::move(out));
}

inline bool words_equal(SimplicialGraph const &g, Word const &u, Word const &w)
{ return normal_form(g, u) == normal_form(g, w); }

inline Word invert(Word const &w)
{
  Word res;
  res.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    res.push_back(it->inverse());
  return res;
}

inline Word concat(Word const &u, Word const &w)
{
  Word res(u);
  res.insert(res.end(), w.begin(), w.end());
  return res;
}

/// u w u^-1.
inline Word conjugate(Word const &u, Word const &w)
{ return concat(concat(u, w), invert(u)); }

/// u w u^-1 w^-1.
inline Word commutator(Word const &u, Word const &w)
{ return concat(concat(u, w), concat(invert(u), invert(w))); }

/// Exponent sum of each generator.
inline std::vector<std::int64_t> abelianize(SimplicialGraph const &g,
                                            Word const &w)
{
  check_word(g, w);
  std::vector<std::int64_t> res(g.num_vertices(), 0);
  for (auto const &l : w)
    res[l.vertex] += l.sign;
  return res;
}

/// Parses whitespace-separated tokens `name` or `name^-1`.
inline Word parse_word(SimplicialGraph const &g, std::string_view text)
{
  Word res;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    int sign = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      auto exponent = tok.substr(pos + 1);
      if (exponent == "-1")
        sign = -1;
      else if (exponent != "1")
        throw parse_error("bad exponent in token '" + tok + "'");
      tok.resize(pos);
    }

    auto v = g.find(tok);
    if (!v)
      throw parse_error("unknown generator '" + tok + "'");
    res.push_back(Letter{*v, sign});
  }
  return res;
}

inline std::string format_word(SimplicialGraph const &g, Word const &w)
{
  std::string res;
  for (auto const &l : w) {
    if (!res.empty())
      res += ' ';
    res += g.name(l.vertex);
    if (l.sign < 0)
      res += "^-1";
  }
  return res;
}

} // namespace raag

#endif // RAAG_WORDS_HPP
