#ifndef JK_PERMUTATION_HPP
#define JK_PERMUTATION_HPP

#include <cstddef>
#include <vector>

namespace jk {

// Bijection of {0..n-1}; image(k) is where k goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);  // throws UsageError if not a bijection

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t k) const { return images_.at(k); }
    const std::vector<std::size_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (a * b)(k) = a(b(k))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

// Adjacent transpositions (k,k+1) for k < n-1; they generate S_n.
std::vector<Permutation> adjacent_transpositions(std::size_t n);

} // namespace jk

#endif
