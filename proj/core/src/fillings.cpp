#include "hlkit/fillings.hpp"

#include <sstream>
#include <stdexcept>

namespace hlkit {

Filling::Filling(Partition shape, std::vector<IntSequence> columns)
    : shape_(std::move(shape)), cols_(std::move(columns)) {
    Partition conj = shape_.conjugate();
    if (static_cast<int>(cols_.size()) != shape_.first())
        throw std::invalid_argument("Filling: wrong number of columns");
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (static_cast<int>(cols_[j].size()) != conj.part(j + 1))
            throw std::invalid_argument("Filling: wrong column length");
}

Filling Filling::from_rows(const Partition& shape,
                           const std::vector<IntSequence>& rows) {
    Partition conj = shape.conjugate();
    if (rows.size() != shape.length())
        throw std::invalid_argument("Filling: wrong number of rows");
    std::vector<IntSequence> cols(shape.first());
    for (int j = 1; j <= shape.first(); ++j) cols[j - 1].resize(conj.part(j));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int len = shape.part(i + 1);
        if (static_cast<int>(rows[i].size()) != len)
            throw std::invalid_argument("Filling: wrong row length");
        // row entries are leftmost..rightmost, i.e. columns len..1
        for (int k = 0; k < len; ++k) cols[len - 1 - k][i] = rows[i][k];
    }
    return Filling(shape, std::move(cols));
}

IntSequence Filling::row(int i) const {
    IntSequence r;
    for (int j = shape_.part(i); j >= 1; --j) r.push_back(entry(i, j));
    return r;
}

bool Filling::is_valid(int n) const {
    for (int j = 1; j <= num_columns(); ++j) {
        const auto& col = column(j);
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 1 || col[i] > n) return false;
            // same-column attack
            for (std::size_t k = i + 1; k < col.size(); ++k)
                if (col[i] == col[k]) return false;
        }
        if (j > 1) {
            const auto& right = column(j - 1);
            for (std::size_t i = 0; i < col.size(); ++i) {
                // weak decrease along the row (rightward)
                if (col[i] < right[i]) return false;
                // consecutive-column attack: left cell strictly below
                for (std::size_t k = 0; k < i; ++k)
                    if (col[i] == right[k]) return false;
            }
        }
    }
    return true;
}

bool Filling::is_fhat() const {
    if (cols_.empty()) return true;
    const auto& c = column(1);
    for (auto [a, b] : shape_.equal_part_blocks(shape_.length()))
        for (int i = a; i < b; ++i)
            if (c[i - 1] >= c[i]) return false;
    return true;
}

int Filling::inv() const {
    int inv = 0;
    for (int j = 1; j <= num_columns(); ++j) {
        const auto& col = column(j);
        for (std::size_t i = 0; i < col.size(); ++i)
            for (std::size_t k = i + 1; k < col.size(); ++k)
                if (col[i] < col[k]) ++inv;
        if (j > 1) {
            const auto& right = column(j - 1);
            for (std::size_t i = 0; i < col.size(); ++i)
                for (std::size_t k = 0; k < i; ++k)
                    if (col[i] < right[k]) ++inv;
        }
    }
    return inv;
}

int Filling::des() const {
    int d = 0;
    for (int j = 2; j <= num_columns(); ++j) {
        const auto& col = column(j);
        const auto& right = column(j - 1);
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col[i] > right[i]) ++d;
    }
    return d;
}

int Filling::cinv_direct() const {
    int c = 0;
    for (int j = 1; j <= num_columns(); ++j) {
        const auto& col = column(j);
        for (std::size_t below = 1; below < col.size(); ++below) {
            for (std::size_t above = 0; above < below; ++above) {
                if (col[below] >= col[above]) continue;
                // left neighbor of the lower cell, if any
                bool has_left = j < num_columns() && below < column(j + 1).size();
                if (!has_left || col[above] < column(j + 1)[below]) ++c;
            }
        }
    }
    return c;
}

ExponentVector Filling::content(int n) const {
    ExponentVector c(n, 0);
    for (const auto& col : cols_)
        for (int e : col) c[e - 1] += 1;
    return c;
}

std::string Filling::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 1; i <= shape_.length(); ++i) {
        if (i > 1) os << " / ";
        // rows padded on the left so columns line up under column lambda_1
        for (int j = shape_.first(); j >= 1; --j) {
            if (j > shape_.part(i))
                os << ". ";
            else
                os << entry(static_cast<int>(i), j) << " ";
        }
    }
    return os.str();
}

std::string Filling::to_json_string() const {
    std::ostringstream os;
    os << "{\"shape\":[";
    for (std::size_t i = 0; i < shape_.parts().size(); ++i) {
        if (i) os << ",";
        os << shape_.parts()[i];
    }
    os << "],\"rows\":[";
    for (std::size_t i = 1; i <= shape_.length(); ++i) {
        if (i > 1) os << ",";
        os << "[";
        auto r = row(static_cast<int>(i));
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) os << ",";
            os << r[k];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

namespace {

struct FillingDfs {
    const Partition& lambda;
    Partition conj;
    int n;
    bool fhat;
    const std::function<void(const Filling&)>& fn;
    std::vector<IntSequence> cols;
    std::vector<std::pair<int, int>> blocks;  // equal-part blocks over rows of column 1

    void run() {
        if (lambda.empty()) {
            fn(Filling(lambda, {}));
            return;
        }
        cols.assign(lambda.first(), {});
        for (int j = 1; j <= lambda.first(); ++j)
            cols[j - 1].resize(conj.part(j));
        blocks = lambda.equal_part_blocks(lambda.length());
        place(1, 1);
    }

    // True when entry e can be placed at (row i, column j).
    bool admissible(int i, int j, int e) const {
        const auto& col = cols[j - 1];
        for (int k = 0; k < i - 1; ++k)
            if (col[k] == e) return false;
        if (j > 1) {
            const auto& right = cols[j - 2];
            if (e < right[i - 1]) return false;
            for (int k = 0; k < i - 1; ++k)
                if (right[k] == e) return false;
        } else if (fhat && i > 1) {
            // strict increase inside the current equal-part block
            for (auto [a, b] : blocks)
                if (a < i && i <= b && e <= cols[0][i - 2]) return false;
        }
        return true;
    }

    void place(int j, int i) {
        if (j > lambda.first()) {
            fn(Filling(lambda, cols));
            return;
        }
        int next_j = j, next_i = i + 1;
        if (next_i > conj.part(j)) {
            next_j = j + 1;
            next_i = 1;
        }
        for (int e = 1; e <= n; ++e) {
            if (!admissible(i, j, e)) continue;
            cols[j - 1][i - 1] = e;
            place(next_j, next_i);
        }
        cols[j - 1][i - 1] = 0;
    }
};

}  // namespace

void for_each_filling(const Partition& lambda, int n, FillingClass cls,
                      const std::function<void(const Filling&)>& fn) {
    FillingDfs dfs{lambda, lambda.conjugate(), n, cls == FillingClass::fhat, fn, {}, {}};
    dfs.run();
}

std::vector<Filling> enumerate_fillings(const Partition& lambda, int n,
                                        FillingClass cls) {
    std::vector<Filling> out;
    for_each_filling(lambda, n, cls, [&](const Filling& f) { out.push_back(f); });
    return out;
}

}  // namespace hlkit
