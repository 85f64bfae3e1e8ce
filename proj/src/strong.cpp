// Bounded strong reduction and left division.

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "psn/error.hpp"
#include "psn/word.hpp"

namespace psn {

namespace {

std::string key_of(const std::vector<Letter>& w) {
  std::string k;
  k.reserve(w.size() * 2);
  for (Letter s : w) {
    k.push_back(static_cast<char>(s.lo));
    k.push_back(static_cast<char>(s.hi));
  }
  return k;
}

class ProductCache {
 public:
  ProductCache(int n, std::size_t max_len) : n_(n), max_len_(max_len) {}

  const std::vector<Word>& operator()(Letter s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) it = cache_.emplace(s, split_products(n_, s, max_len_)).first;
    return it->second;
  }

 private:
  int n_;
  std::size_t max_len_;
  std::map<Letter, std::vector<Word>> cache_;
};

// Calls emit(successor) for every single cancellation or splitting of w.
// Returns false as soon as emit does.
template <typename Emit>
bool for_each_rewrite(const std::vector<Letter>& w, ProductCache& products, Emit&& emit) {
  const std::size_t n = w.size();
  auto erase = [&](std::size_t i) {
    std::vector<Letter> x = w;
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(i));
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    // w[i] travels right towards w[j].
    for (std::size_t j = i + 1; j < n; ++j) {
      if (contains(w[j], w[i])) {
        if (!emit(erase(i))) return false;
        if (w[i] == w[j]) {
          for (const Word& p : products(w[i])) {
            std::vector<Letter> x;
            x.reserve(n + p.size());
            x.insert(x.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            x.insert(x.end(), p.begin(), p.end());
            for (std::size_t k = i + 1; k < n; ++k) {
              if (k != j) x.push_back(w[k]);
            }
            if (!emit(std::move(x))) return false;
          }
        }
        break;
      }
      if (!commutes(w[i], w[j])) break;
    }
    // w[i] travels left into a strictly larger letter (equal letters were
    // handled above from the other side).
    for (std::size_t j = i; j-- > 0;) {
      if (contains(w[j], w[i], true)) {
        if (!emit(erase(i))) return false;
        break;
      }
      if (!commutes(w[i], w[j])) break;
    }
  }
  return true;
}

std::vector<Letter> sorted_letters(std::vector<Letter> w, int n) {
  return normal_form(Word(n, std::move(w))).letters();
}

}  // namespace

std::vector<Word> split_products(int n, Letter s, std::size_t max_len) {
  std::vector<Letter> subs;
  for (Letter t : all_letters(n)) {
    if (contains(s, t, true)) subs.push_back(t);
  }
  std::vector<Word> out;
  std::unordered_set<std::string> seen;
  std::vector<Letter> cur;
  auto visit = [&](auto&& self) -> void {
    Word w(n, cur);
    if (!is_reduced(w)) return;
    Word nf = normal_form(w);
    if (seen.insert(key_of(nf.letters())).second) out.push_back(nf);
    if (cur.size() == max_len) return;
    for (Letter t : subs) {
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  visit(visit);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.letters() < b.letters();
  });
  return out;
}

StrongReducts strong_reducts_bounded(const Word& u, std::size_t max_split_len,
                                     std::size_t max_steps) {
  const int n = u.dim();
  ProductCache products(n, max_split_len);
  StrongReducts result;
  std::unordered_set<std::string> visited;
  std::deque<std::vector<Letter>> queue;
  std::vector<Letter> start = normal_form(u).letters();
  visited.insert(key_of(start));
  queue.push_back(std::move(start));
  std::map<std::string, Word> found;
  while (!queue.empty()) {
    std::vector<Letter> x = std::move(queue.front());
    queue.pop_front();
    Word wx(n, x);
    if (is_reduced(wx)) {
      found.emplace(wx.to_string(), wx);
      continue;
    }
    bool within = for_each_rewrite(x, products, [&](std::vector<Letter> y) {
      if (++result.steps > max_steps) return false;
      y = sorted_letters(std::move(y), n);
      if (visited.insert(key_of(y)).second) queue.push_back(std::move(y));
      return true;
    });
    if (!within) {
      result.status = SearchStatus::budget_exhausted;
      --result.steps;
      break;
    }
  }
  for (auto& [text, w] : found) result.reducts.push_back(std::move(w));
  return result;
}

TargetStatus strong_reduces_to_bounded(const Word& u, const Word& target,
                                       std::size_t max_split_len, std::size_t max_steps) {
  const int n = u.dim();
  if (target.dim() != n) {
    throw Error(Errc::dimension_mismatch, "target has a different N");
  }
  const Word goal = normal_form(target);
  const CnfOrdinal goal_ord = ord_rank(goal);
  // Every rewrite moves strictly down in ≺, so a state can reach the goal
  // only if the goal lies ⪯ below it.
  auto viable = [&](const std::vector<Letter>& x) {
    Word wx(n, x);
    if (cnf_cmp(goal_ord, ord_rank(wx)) > 0) return false;
    try {
      return prec_or_equivalent(goal, wx, 40);
    } catch (const Error&) {
      return true;
    }
  };
  ProductCache products(n, max_split_len);
  std::unordered_set<std::string> visited;
  std::vector<std::vector<Letter>> stack;
  std::vector<Letter> start = normal_form(u).letters();
  if (!viable(start)) return TargetStatus::not_found;
  visited.insert(key_of(start));
  stack.push_back(std::move(start));
  std::size_t steps = 0;
  while (!stack.empty()) {
    std::vector<Letter> x = std::move(stack.back());
    stack.pop_back();
    if (x == goal.letters()) return TargetStatus::found;
    bool hit = false;
    bool within = for_each_rewrite(x, products, [&](std::vector<Letter> y) {
      if (++steps > max_steps) return false;
      y = sorted_letters(std::move(y), n);
      if (y == goal.letters()) {
        hit = true;
        return false;
      }
      if (visited.insert(key_of(y)).second && viable(y)) stack.push_back(std::move(y));
      return true;
    });
    if (hit) return TargetStatus::found;
    if (!within) return TargetStatus::budget_exhausted;
  }
  return TargetStatus::not_found;
}

DivideResult divides_left_bounded(const Word& u, const Word& v,
                                  std::optional<std::size_t> max_len) {
  if (u.dim() != v.dim()) throw Error(Errc::dimension_mismatch, "words have different N");
  for (const Word* w : {&u, &v}) {
    if (!is_reduced(*w)) throw Error(Errc::not_reduced, w->to_string() + " is not reduced");
  }
  const int n = u.dim();
  const std::size_t bound = max_len.value_or(v.size() + 4);
  const Word goal = normal_form(v);
  // Any reduct of u·w is ⪯ the reduct of u·w·w', so states not ⪯ v are dead.
  auto viable = [&](const Word& x) {
    try {
      return prec_or_equivalent(x, goal, 40);
    } catch (const Error&) {
      return true;
    }
  };
  struct State {
    Word x;
    Word w;
  };
  Word x0 = reduce(u);
  if (x0 == goal) return {DivideStatus::found, Word(n)};
  if (!viable(x0)) return {DivideStatus::none, std::nullopt};
  std::unordered_set<std::string> visited{x0.to_string()};
  std::vector<State> frontier{{x0, Word(n)}};
  const std::vector<Letter> alphabet = all_letters(n);
  for (std::size_t depth = 1; depth <= bound && !frontier.empty(); ++depth) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (Letter s : alphabet) {
        Word w = st.w;
        w.push_back(s);
        Word x = concat_reduce(st.x, Word(n, {s}));
        if (x == goal) return {DivideStatus::found, reduce(w)};
        if (!visited.insert(x.to_string()).second || !viable(x)) continue;
        next.push_back({std::move(x), std::move(w)});
      }
    }
    frontier = std::move(next);
  }
  if (frontier.empty()) return {DivideStatus::none, std::nullopt};
  return {DivideStatus::bound_exhausted, std::nullopt};
}

}  // namespace psn
