#include "lrc/matrix.hpp"

#include <span>

namespace lrc {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat null_space(const Mat& m) {
    Mat work = m;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat ns(m.field(), free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        ns.at(i, fc) = m.field()->one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            ns.at(i, pivots[pr]) = -work.at(pr, fc);
    }
    return ns;
}

std::vector<FieldElement> encode(const Mat& gen, std::span<const FieldElement> message) {
    if (message.size() != gen.rows()) throw DimensionMismatch("message length != generator rows");
    std::vector<FieldElement> out(gen.cols(), gen.field()->zero());
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        if (message[r].is_zero()) continue;
        for (std::size_t c = 0; c < gen.cols(); ++c) out[c] += message[r] * gen.at(r, c);
    }
    return out;
}

}  // namespace lrc
