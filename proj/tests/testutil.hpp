#pragma once

#include <vector>

#include "dstm/fields.hpp"
#include "dstm/shape.hpp"
#include "dstm/tensor.hpp"

namespace dstm::testutil {

// Hand-picked shapes that exercise the interesting regimes: square, tight
// mixed axes, three axes, strict and non-strict classifications.
inline std::vector<Shape> small_shapes() {
    return {Shape::of({2, 2}),    Shape::of({3, 3}), Shape::of({2, 3}),
            Shape::of({3, 3, 3}), Shape::of({1, 2}), Shape::of({2, 2, 2}),
            Shape::of({2, 3, 4}), Shape::of({4, 4})};
}

// Every shape with k axes and entries in [1, max_entry].
inline std::vector<Shape> shape_family(int max_k, int max_entry) {
    std::vector<Shape> out;
    std::vector<int> entries;
    for (int k = 1; k <= max_k; ++k) {
        entries.assign(k, 1);
        while (true) {
            out.push_back(Shape::of(entries));
            int a = k - 1;
            while (a >= 0 && entries[a] == max_entry) entries[a--] = 1;
            if (a < 0) break;
            ++entries[a];
        }
    }
    return out;
}

inline Tensor<RationalField> rational_tensor(const Shape& s, int p,
                                             std::vector<long long> entries) {
    std::vector<Rational> coeffs(entries.begin(), entries.end());
    return tensor_from_entries<RationalField>(s, p, std::move(coeffs));
}

// The worked square example: rows are the first axis.
inline Tensor<RationalField> worked_t33() {
    return rational_tensor(Shape::of({3, 3}), 2, {1, 1, 1, 2, 2, 1, 2, 2, 3});
}

} // namespace dstm::testutil
