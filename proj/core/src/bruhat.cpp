#include "ferrers/bruhat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ferrers/errors.hpp"

namespace ferrers {

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[v] = true;
  }
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) os << ',';
    os << images[i];
  }
  os << ']';
  return os.str();
}

Permutation top_permutation(const Partition& p) {
  return Permutation(complete_to_permutation(max_placement(p), p));
}

bool avoids_312(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (w.image(j) < w.image(k) && w.image(k) < w.image(i)) return false;
  return true;
}

bool perm_bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("permutations of different sizes");
  std::vector<int> vs, ws;
  for (int j = 1; j <= v.size(); ++j) {
    vs.insert(std::upper_bound(vs.begin(), vs.end(), v.image(j)), v.image(j));
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w.image(j)), w.image(j));
    for (std::size_t t = 0; t < vs.size(); ++t)
      if (vs[t] > ws[t]) return false;
  }
  return true;
}

Poset lower_bruhat_interval(const Permutation& w, long long max_elements) {
  const int n = w.size();
  std::map<std::vector<int>, int> id;
  std::vector<Permutation> elems;
  std::vector<Permutation> frontier{w};
  id[w.images] = 0;
  elems.push_back(w);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& u : frontier) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (u.image(i) <= u.image(j)) continue;
          std::vector<int> imgs = u.images;
          std::swap(imgs[i - 1], imgs[j - 1]);
          if (id.emplace(imgs, static_cast<int>(elems.size())).second) {
            elems.emplace_back(Permutation(imgs));
            next.push_back(elems.back());
            if (static_cast<long long>(elems.size()) > max_elements)
              throw ResourceGuardError(elems.size(), max_elements);
          }
        }
    }
    frontier = std::move(next);
  }
  // keep only true interval members (descent alone is already exact, but the
  // dominance filter is the defining criterion)
  std::vector<int> keep;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (perm_bruhat_leq(elems[i], w)) keep.push_back(static_cast<int>(i));

  // sort by length then one-line notation for stable ids
  std::sort(keep.begin(), keep.end(), [&](int a, int b) {
    int ia = inversion_count(elems[a].images);
    int ib = inversion_count(elems[b].images);
    return std::pair(ia, elems[a].images) < std::pair(ib, elems[b].images);
  });
  const int k = static_cast<int>(keep.size());
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = elems[keep[i]].to_string();

  BitMatrix less(k, k);
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a)
      if (a != b && perm_bruhat_leq(elems[keep[a]], elems[keep[b]]))
        less.set(b, a);
  std::vector<std::pair<int, int>> covers;
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) {
      if (!less.test(b, a)) continue;
      bool is_cover = true;
      for (int c = 0; c < k && is_cover; ++c)
        if (less.test(c, a) && less.test(b, c)) is_cover = false;
      if (is_cover) covers.emplace_back(a, b);
    }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

Partition board_from_312(const Permutation& w) {
  if (!avoids_312(w))
    throw std::invalid_argument("permutation contains a 312 pattern");
  std::vector<int> parts(w.size());
  int run_max = 0;
  for (int i = 1; i <= w.size(); ++i) {
    run_max = std::max(run_max, w.image(i));
    parts[i - 1] = std::max(i, run_max);
  }
  return Partition(std::move(parts));
}

Permutation parse_permutation(const std::string& text) {
  return Permutation(parse_placement(text).columns);
}

}  // namespace ferrers
