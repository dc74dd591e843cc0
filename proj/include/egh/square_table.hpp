#pragma once

#include <cstddef>
#include <vector>

namespace egh {

// Dense n-by-n table with flat storage.
template <class T>
class SquareTable {
public:
    SquareTable() = default;
    explicit SquareTable(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool operator==(const SquareTable&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

} // namespace egh
