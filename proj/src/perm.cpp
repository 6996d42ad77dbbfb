#include "latsieve/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latsieve/error.hpp"

namespace latsieve {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw Error(ErrorCode::ParseError, "image list is not a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Perm(std::move(images));
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    std::vector<char> moved(static_cast<std::size_t>(degree), 0);
    while (i < text.size()) {
        if (text[i] != '(')
            throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error(ErrorCode::ParseError, "expected point in cycle notation: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree)
                throw Error(ErrorCode::ParseError,
                            "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            cycle.push_back(v - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i >= text.size())
            throw Error(ErrorCode::ParseError, "unterminated cycle: " + text);
        ++i;  // ')'
        for (int p : cycle) {
            if (moved[static_cast<std::size_t>(p)])
                throw Error(ErrorCode::ParseError, "cycles are not disjoint: " + text);
            moved[static_cast<std::size_t>(p)] = 1;
        }
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k])] = cycle[k + 1];
        if (cycle.size() > 1)
            images[static_cast<std::size_t>(cycle.back())] = cycle.front();
        skip_ws();
    }
    return Perm(std::move(images));
}

Perm Perm::then(const Perm& other) const {
    std::vector<int> images(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        images[x] = other.apply(images_[x]);
    return Perm(std::move(images));
}

Perm Perm::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        images[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    return Perm(std::move(images));
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

std::string Perm::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<int>(start)) continue;
        any = true;
        out << '(';
        int x = static_cast<int>(start);
        bool first = true;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            if (!first) out << ' ';
            out << (x + 1);
            first = false;
            x = images_[static_cast<std::size_t>(x)];
        } while (x != static_cast<int>(start));
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ForeignSubgroup: return "ForeignSubgroup";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::UnknownPattern: return "UnknownPattern";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::CacheCorrupt: return "CacheCorrupt";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace latsieve
