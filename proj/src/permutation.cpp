#include "fsg/permutation.hpp"

#include <numeric>

namespace fsg {

Permutation::Permutation(int m) {
  if (m < 1) throw DomainError("permutation size must be >= 1");
  img_.resize(static_cast<std::size_t>(m));
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw DomainError("permutation size must be >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation image list is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::rotation(int m, int r) {
  if (m < 1) throw DomainError("permutation size must be >= 1");
  r = ((r % m) + m) % m;
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = (i + r) % m;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_rotation() const {
  int r = (*this)(0);
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != (i + r) % size()) return false;
  return true;
}

int Permutation::rotation_amount() const {
  if (!is_rotation()) throw DomainError("not a rotation");
  return (*this)(0);
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw DomainError("permutation size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(o(i));
  return Permutation(std::move(img));
}

BzsResult bzs_drag(const Forest& g, const Permutation& pi) {
  if (g.roots() != pi.size()) throw DomainError("bzs_drag: roots(g) != size(pi)");
  int m = pi.size();
  // Tree i of g ends up at bottom position pi(i).
  std::vector<Tree> placed(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    placed[static_cast<std::size_t>(pi(i))] = g.trees[static_cast<std::size_t>(i)];
  Forest g_pi(std::move(placed));

  std::vector<int> off_top(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i)
    off_top[static_cast<std::size_t>(i) + 1] =
        off_top[static_cast<std::size_t>(i)] + g.trees[static_cast<std::size_t>(i)].leaves();
  std::vector<int> off_bot(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 0; j < m; ++j)
    off_bot[static_cast<std::size_t>(j) + 1] =
        off_bot[static_cast<std::size_t>(j)] + g_pi.trees[static_cast<std::size_t>(j)].leaves();

  std::vector<int> img(static_cast<std::size_t>(g.leaves()));
  for (int i = 0; i < m; ++i) {
    int lv = g.trees[static_cast<std::size_t>(i)].leaves();
    for (int r = 0; r < lv; ++r)
      img[static_cast<std::size_t>(off_top[static_cast<std::size_t>(i)] + r)] =
          off_bot[static_cast<std::size_t>(pi(i))] + r;
  }
  return BzsResult{std::move(g_pi), Permutation(std::move(img))};
}

}  // namespace fsg
