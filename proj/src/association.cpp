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

#include "hetnet/association.hpp"

#include <stdexcept>
#include <string>

namespace hetnet {

Association::Association(std::size_t num_bs, std::vector<std::size_t> serving)
    : num_bs_(num_bs), serving_(std::move(serving))
{
    if (num_bs_ == 0)
        throw std::invalid_argument("association needs at least one BS");
    for (std::size_t k = 0; k < serving_.size(); ++k) {
        if (serving_[k] >= num_bs_)
            throw std::invalid_argument("user " + std::to_string(k) + " served by out-of-range BS " +
                                        std::to_string(serving_[k]));
    }
}

Association Association::all_on(std::size_t num_bs, std::size_t num_users, std::size_t bs)
{
    return Association(num_bs, std::vector<std::size_t>(num_users, bs));
}

Association Association::from_matrix(const Matrix& x)
{
    const auto n_bs = static_cast<std::size_t>(x.rows());
    const auto n_users = static_cast<std::size_t>(x.cols());
    std::vector<std::size_t> serving(n_users);
    for (std::size_t k = 0; k < n_users; ++k) {
        int ones = 0;
        for (std::size_t n = 0; n < n_bs; ++n) {
            const double v = x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
            if (v == 1.0) {
                ++ones;
                serving[k] = n;
            } else if (v != 0.0) {
                throw std::invalid_argument("association entry is not binary at column " +
                                            std::to_string(k));
            }
        }
        if (ones != 1)
            throw std::invalid_argument("column " + std::to_string(k) + " sums to " +
                                        std::to_string(ones) + ", expected 1");
    }
    return Association(n_bs, std::move(serving));
}

std::vector<int> Association::loads() const
{
    std::vector<int> y(num_bs_, 0);
    for (auto n : serving_)
        ++y[n];
    return y;
}

Matrix Association::to_matrix() const
{
    Matrix x = Matrix::Zero(static_cast<Eigen::Index>(num_bs_), static_cast<Eigen::Index>(serving_.size()));
    for (std::size_t k = 0; k < serving_.size(); ++k)
        x(static_cast<Eigen::Index>(serving_[k]), static_cast<Eigen::Index>(k)) = 1.0;
    return x;
}

}  // namespace hetnet
