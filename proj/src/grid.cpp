#include "multdec/grid.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "multdec/errors.hpp"

namespace multdec {

Grid::Grid(const PrimeField& field, std::vector<std::uint32_t> s_points, std::size_t k)
    : field_(field), s_(std::move(s_points)), k_(k), size_(1) {
    if (k == 0) throw ValidationError("grid dimension must be at least 1");
    if (s_.empty()) throw ValidationError("grid set S must be nonempty");
    for (auto v : s_) {
        if (v >= field.p()) {
            throw ValidationError("grid point " + std::to_string(v) + " is not a residue mod " +
                                  std::to_string(field.p()));
        }
    }
    auto sorted = s_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("grid set S has repeated points");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (size_ > std::numeric_limits<std::uint32_t>::max() / s_.size()) {
            throw ValidationError("grid too large");
        }
        size_ *= s_.size();
    }
}

std::vector<std::uint32_t> Grid::point(std::size_t index) const {
    if (index >= size_) throw ValidationError("grid index out of range");
    std::vector<std::uint32_t> a(k_);
    for (std::size_t i = k_; i-- > 0;) {
        a[i] = s_[index % s_.size()];
        index /= s_.size();
    }
    return a;
}

std::vector<std::vector<std::uint32_t>> Grid::points() const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(size_);
    for (std::size_t n = 0; n < size_; ++n) out.push_back(point(n));
    return out;
}

std::size_t Grid::index_of(const std::vector<std::uint32_t>& point) const {
    if (point.size() != k_) throw ValidationError("point arity does not match grid");
    std::size_t idx = 0;
    for (auto v : point) {
        auto it = std::find(s_.begin(), s_.end(), v);
        if (it == s_.end()) throw ValidationError("point is not on the grid");
        idx = idx * s_.size() + static_cast<std::size_t>(it - s_.begin());
    }
    return idx;
}

std::vector<std::vector<std::uint32_t>> integer_box(std::size_t side, std::size_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    if (side == 0) return out;
    std::vector<std::uint32_t> cur(k, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++cur[i] < side) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

}  // namespace multdec
