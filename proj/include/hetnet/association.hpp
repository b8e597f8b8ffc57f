// Copyright 2026 The hetnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HETNET_ASSOCIATION_HPP
#define HETNET_ASSOCIATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hetnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Binary user-to-BS association.
///
/// Stored as the serving-BS index of every user, so every column of the
/// equivalent N x K indicator matrix sums to exactly one by construction.
class Association {
public:
    Association() = default;

    /// Throws std::invalid_argument if num_bs is zero or any index is out of range.
    Association(std::size_t num_bs, std::vector<std::size_t> serving);

    /// All users served by the same BS.
    static Association all_on(std::size_t num_bs, std::size_t num_users, std::size_t bs);

    /// Builds from an N x K indicator matrix; every entry must be 0 or 1 and
    /// every column must sum to 1.
    static Association from_matrix(const Matrix& x);

    std::size_t num_bs() const noexcept { return num_bs_; }
    std::size_t num_users() const noexcept { return serving_.size(); }

    std::size_t serving(std::size_t k) const { return serving_.at(k); }
    std::span<const std::size_t> serving() const noexcept { return serving_; }

    /// Indicator x_nk.
    int operator()(std::size_t n, std::size_t k) const { return serving_.at(k) == n ? 1 : 0; }

    /// Per-BS load y_n = number of associated users.
    std::vector<int> loads() const;

    Matrix to_matrix() const;

    friend bool operator==(const Association&, const Association&) = default;

private:
    std::size_t num_bs_ = 0;
    std::vector<std::size_t> serving_;
};

}  // namespace hetnet

#endif  // HETNET_ASSOCIATION_HPP
