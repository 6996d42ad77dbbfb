#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace latsieve {

// Permutation of the points {0, ..., degree-1}. The text form uses 1-based
// disjoint cycle notation with fixed points omissible, e.g. "(1 2 3 4)(5 6)".
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int degree);
    // Throws Error(ParseError) on malformed cycles or points outside 1..degree.
    static Perm parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[static_cast<std::size_t>(x)]; }

    // Left-to-right composition: (a.then(b))(x) = b(a(x)).
    Perm then(const Perm& other) const;
    Perm inverse() const;
    bool is_identity() const;

    std::string cycle_string() const;  // "()" for the identity

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

}  // namespace latsieve
