#include "jk/permutation.hpp"

#include <numeric>

#include "jk/errors.hpp"

namespace jk {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) throw UsageError("permutation is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), std::size_t{0});
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b)
{
    if (a >= n || b >= n) throw UsageError("transposition index out of range");
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), std::size_t{0});
    std::swap(im[a], im[b]);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const
{
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (images_[k] != k) return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = k;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) throw UsageError("permutation sizes differ");
    std::vector<std::size_t> im(a.size());
    for (std::size_t k = 0; k < im.size(); ++k) im[k] = a(b(k));
    return Permutation(std::move(im));
}

std::vector<Permutation> adjacent_transpositions(std::size_t n)
{
    std::vector<Permutation> out;
    for (std::size_t k = 0; k + 1 < n; ++k) out.push_back(Permutation::transposition(n, k, k + 1));
    return out;
}

} // namespace jk
