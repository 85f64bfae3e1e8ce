#include "psn/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "psn/error.hpp"

namespace psn {

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  check_dimension(n);
  for (Letter s : letters_) {
    if (!s.valid_for(n)) {
      throw Error(Errc::invalid_letter,
                  psn::to_string(s) + " is not a letter for N=" + std::to_string(n));
    }
  }
}

Word Word::parse(std::string_view text, int n) {
  Word w(n);
  if (text == "1") return w;
  if (text.empty()) throw Error(Errc::parse_error, "empty word text (use \"1\")");
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = text.find('.', start);
    w.letters_.push_back(parse_letter(text.substr(start, dot - start), n));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Letter s : letters_) {
    if (!out.empty()) out += '.';
    out += psn::to_string(s);
  }
  return out;
}

void Word::push_back(Letter s) {
  if (!s.valid_for(n_)) {
    throw Error(Errc::invalid_letter,
                psn::to_string(s) + " is not a letter for N=" + std::to_string(n_));
  }
  letters_.push_back(s);
}

Word Word::operator+(const Word& other) const {
  if (other.n_ != n_) {
    throw Error(Errc::dimension_mismatch, "concatenating words of different N");
  }
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

namespace {

void require_same_dim(const Word& u, const Word& v) {
  if (u.dim() != v.dim()) {
    throw Error(Errc::dimension_mismatch, "words have different N (" +
                                              std::to_string(u.dim()) + " vs " +
                                              std::to_string(v.dim()) + ")");
  }
}

void require_reduced(const Word& u) {
  if (!is_reduced(u)) {
    throw Error(Errc::not_reduced, u.to_string() + " is not reduced");
  }
}

// Index of a letter that can be cancelled: it commutes with everything
// between itself and a letter containing it.  Leftmost such letter, found
// against its nearest absorber.
std::optional<std::size_t> cancellable_position(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (contains(w[j], w[i])) return i;
      if (!commutes(w[i], w[j])) break;
    }
    for (std::size_t j = i; j-- > 0;) {
      if (contains(w[j], w[i])) return i;
      if (!commutes(w[i], w[j])) break;
    }
  }
  return std::nullopt;
}

void sort_commuting(std::vector<Letter>& w) {
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (letter_lt(w[k + 1], w[k])) {
        std::swap(w[k], w[k + 1]);
        swapped = true;
      }
    }
  }
}

}  // namespace

bool is_reduced(const Word& u) { return !cancellable_position(u.letters()); }

Word reduce(const Word& u) {
  std::vector<Letter> w = u.letters();
  while (auto i = cancellable_position(w)) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(*i));
  }
  sort_commuting(w);
  return Word(u.dim(), std::move(w));
}

Word normal_form(const Word& u) {
  std::vector<Letter> w = u.letters();
  sort_commuting(w);
  return Word(u.dim(), std::move(w));
}

bool equivalent(const Word& u, const Word& v) {
  require_same_dim(u, v);
  return u.size() == v.size() && normal_form(u) == normal_form(v);
}

Word inverse(const Word& u) {
  std::vector<Letter> w(u.letters().rbegin(), u.letters().rend());
  return Word(u.dim(), std::move(w));
}

IndexSet support(const Word& u) {
  IndexSet out;
  for (Letter s : u) out |= s.levels();
  return out;
}

FinalSegment final_segment(const Word& u) {
  std::vector<Letter> rest, seg;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool final = true;
    for (std::size_t j = i + 1; j < u.size() && final; ++j) {
      final = commutes(u[i], u[j]);
    }
    (final ? seg : rest).push_back(u[i]);
  }
  return {normal_form(Word(u.dim(), std::move(rest))),
          normal_form(Word(u.dim(), std::move(seg)))};
}

IndexSet left_stabilizer(const Word& v) {
  IndexSet out;
  IndexSet cent = IndexSet::full(v.dim());
  for (Letter t : v) {
    out |= t.levels() & cent;
    cent &= centralizer({t}, v.dim());
  }
  return out;
}

IndexSet right_stabilizer(const Word& v) { return left_stabilizer(inverse(v)); }

std::optional<std::size_t> left_absorber(const Word& v, Letter s) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (contains(v[j], s)) return j;
    if (!commutes(s, v[j])) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> right_absorber(const Word& u, Letter s) {
  for (std::size_t j = u.size(); j-- > 0;) {
    if (contains(u[j], s)) return j;
    if (!commutes(s, u[j])) return std::nullopt;
  }
  return std::nullopt;
}

bool absorbs_left(const Word& v, const Word& u) {
  require_same_dim(u, v);
  return support(u).subset_of(left_stabilizer(v));
}

bool absorbs_right(const Word& u, const Word& v) {
  require_same_dim(u, v);
  return support(v).subset_of(right_stabilizer(u));
}

bool properly_absorbs_left(const Word& v, const Word& u) {
  require_same_dim(u, v);
  for (Letter s : u) {
    auto j = left_absorber(v, s);
    if (!j || v[*j] == s) return false;
  }
  return true;
}

bool properly_absorbs_right(const Word& u, const Word& v) {
  require_same_dim(u, v);
  for (Letter s : v) {
    auto j = right_absorber(u, s);
    if (!j || u[*j] == s) return false;
  }
  return true;
}

Split split_absorbed(const Word& u, IndexSet S) {
  std::vector<Letter> rest = u.letters();
  std::vector<Letter> tail;
  for (;;) {
    std::vector<Letter> keep, moved;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool final = true;
      for (std::size_t j = i + 1; j < rest.size() && final; ++j) {
        final = commutes(rest[i], rest[j]);
      }
      (final && rest[i].levels().subset_of(S) ? moved : keep).push_back(rest[i]);
    }
    if (moved.empty()) break;
    moved.insert(moved.end(), tail.begin(), tail.end());
    tail = std::move(moved);
    rest = std::move(keep);
  }
  return {normal_form(Word(u.dim(), std::move(rest))),
          normal_form(Word(u.dim(), std::move(tail)))};
}

FineDecomposition decompose_fine(const Word& u, const Word& v) {
  require_same_dim(u, v);
  require_reduced(u);
  require_reduced(v);
  Split left = split_absorbed(u, left_stabilizer(v));
  // v is split from its left end by sr(u1): mirror the word, split, mirror back.
  Split right = split_absorbed(inverse(v), right_stabilizer(left.u1));
  return {left.u1, left.u2, normal_form(inverse(right.u2)),
          normal_form(inverse(right.u1)), Word(u.dim())};
}

FineDecomposition decompose_symmetric(const Word& u, const Word& v) {
  FineDecomposition d = decompose_fine(u, v);
  // Letters of u' whose absorber in v1 is the letter itself move into w;
  // these absorbers sit in the initial segment of v1 and are removed there.
  std::vector<Letter> up, w;
  std::vector<bool> drop(d.v1.size(), false);
  for (Letter s : d.u_prime) {
    auto j = left_absorber(d.v1, s);
    if (j && d.v1[*j] == s) {
      w.push_back(s);
      drop[*j] = true;
    } else {
      up.push_back(s);
    }
  }
  std::vector<Letter> v1;
  for (std::size_t j = 0; j < d.v1.size(); ++j) {
    if (!drop[j]) v1.push_back(d.v1[j]);
  }
  const int n = u.dim();
  d.u_prime = normal_form(Word(n, std::move(up)));
  d.w = normal_form(Word(n, std::move(w)));
  d.v1 = normal_form(Word(n, std::move(v1)));
  return d;
}

Word concat_reduce(const Word& u, const Word& v) { return reduce(u + v); }

IndexSet wobbling(const Word& u, const Word& v) {
  require_same_dim(u, v);
  return right_stabilizer(u) & left_stabilizer(v);
}

namespace {

// Backtracking for u ≺ v.  The letters of v are processed in order; each is
// kept or replaced by a block of proper subletters.  The produced sequence
// must be commutation-equivalent to u, which is tested incrementally by
// peeling letters off the front of u as a trace: a letter can be peeled iff
// its first remaining occurrence commutes with every remaining letter
// before it.
class PrecSearch {
 public:
  PrecSearch(const Word& u, const Word& v) : u_(u.letters()), v_(v.letters()) {
    full_ = u_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u_.size()) - 1;
  }

  bool run() { return step(0, 0, false); }

 private:
  int peel(std::uint64_t used, Letter x) const {
    for (std::size_t p = 0; p < u_.size(); ++p) {
      if ((used >> p) & 1U) continue;
      if (u_[p] == x) return static_cast<int>(p);
      if (!commutes(u_[p], x)) return -1;
    }
    return -1;
  }

  // Next letter of v, or end.
  bool step(std::size_t k, std::uint64_t used, bool replaced) {
    if (k == v_.size()) return used == full_ && replaced;
    if (!seen(0, k, used, replaced)) return false;
    int p = peel(used, v_[k]);
    if (p >= 0 && step(k + 1, used | (std::uint64_t{1} << p), replaced)) return true;
    return block(k, used);
  }

  // Inside the replacement block for v[k].
  bool block(std::size_t k, std::uint64_t used) {
    if (!seen(1, k, used, true)) return false;
    if (step(k + 1, used, true)) return true;
    for (std::size_t p = 0; p < u_.size(); ++p) {
      if ((used >> p) & 1U) continue;
      if (!contains(v_[k], u_[p], true)) continue;
      if (peel(used, u_[p]) != static_cast<int>(p)) continue;
      if (block(k, used | (std::uint64_t{1} << p))) return true;
    }
    return false;
  }

  // Records a state; false when it was already explored (and failed).
  bool seen(int mode, std::size_t k, std::uint64_t used, bool replaced) {
    Key key{used, static_cast<std::uint32_t>(k * 4 + mode * 2 + (replaced ? 1 : 0))};
    return visited_.insert(key).second;
  }

  struct Key {
    std::uint64_t used;
    std::uint32_t rest;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.used * 1000003U ^ k.rest);
    }
  };

  const std::vector<Letter>& u_;
  const std::vector<Letter>& v_;
  std::uint64_t full_;
  std::unordered_set<Key, KeyHash> visited_;
};

}  // namespace

bool prec(const Word& u, const Word& v, std::size_t cap) {
  require_same_dim(u, v);
  if (u.size() + v.size() > cap || u.size() > 63) {
    throw Error(Errc::search_bound_exceeded,
                "prec instance of combined length " +
                    std::to_string(u.size() + v.size()) + " exceeds cap " +
                    std::to_string(cap));
  }
  return PrecSearch(u, v).run();
}

bool prec_or_equivalent(const Word& u, const Word& v, std::size_t cap) {
  return equivalent(u, v) || prec(u, v, cap);
}

CnfOrdinal ord_rank(const Word& u) {
  std::vector<std::uint64_t> count(static_cast<std::size_t>(u.dim()) + 1, 0);
  for (Letter s : u) ++count[static_cast<std::size_t>(s.size() - 1)];
  CnfOrdinal out;
  for (std::size_t e = count.size(); e-- > 0;) {
    out = cnf_add(out, CnfOrdinal::omega_power(e, count[e]));
  }
  return out;
}

CnfOrdinal rd_closed_form(const Word& u) {
  require_reduced(u);
  // A non-increasing arrangement exists iff no pair that cannot be swapped
  // past each other has the smaller letter first.
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!commutes(u[i], u[j]) && u[i].size() < u[j].size()) {
        throw Error(Errc::not_monotone,
                    u.to_string() + ": letter sizes increase from " +
                        to_string(u[i]) + " to " + to_string(u[j]));
      }
    }
  }
  CnfOrdinal out;
  std::vector<Letter> sorted = u.letters();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](Letter a, Letter b) { return a.size() > b.size(); });
  for (Letter s : sorted) {
    out = cnf_add(out, CnfOrdinal::omega_power(static_cast<std::uint64_t>(s.size() - 1)));
  }
  return out;
}

}  // namespace psn
