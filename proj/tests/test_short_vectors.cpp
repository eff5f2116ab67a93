#include "wallcross/short_vectors.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wallcross;

namespace {

std::set<std::vector<Int>> as_set(const std::vector<std::vector<Int>>& v) {
    return {v.begin(), v.end()};
}

// independent oracle: scan an explicit box
std::set<std::vector<Int>> box_oracle(const QMat& q, const Rat& bound, long half_width) {
    std::set<std::vector<Int>> out;
    int n = q.rows();
    std::vector<long> v(size_t(n), -half_width);
    while (true) {
        Rat val(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) val += q.at(i, j) * Rat(v[size_t(i)]) * Rat(v[size_t(j)]);
        if (val <= bound) {
            std::vector<Int> vi;
            for (long x : v) vi.emplace_back(x);
            out.insert(vi);
        }
        int k = 0;
        while (k < n && v[size_t(k)] == half_width) v[size_t(k++)] = -half_width;
        if (k == n) break;
        ++v[size_t(k)];
    }
    return out;
}

}  // namespace

TEST_CASE("unit ball of the identity form") {
    auto got = short_vectors(QMat::identity(2), Rat(1));
    CHECK(got.size() == 5);
    CHECK(as_set(got) == box_oracle(QMat::identity(2), Rat(1), 2));

    auto two = short_vectors(QMat::identity(2), Rat(2));
    CHECK(two.size() == 9);
}

TEST_CASE("skew form enumerates the hexagonal ball") {
    QMat q{{2, 1}, {1, 2}};
    auto got = as_set(short_vectors(q, Rat(2)));
    std::set<std::vector<Int>> expect = {
        {Int(0), Int(0)}, {Int(1), Int(0)},  {Int(-1), Int(0)}, {Int(0), Int(1)},
        {Int(0), Int(-1)}, {Int(1), Int(-1)}, {Int(-1), Int(1)},
    };
    CHECK(got == expect);
    CHECK(got == box_oracle(q, Rat(2), 2));
}

TEST_CASE("rejects non positive definite forms") {
    CHECK_THROWS(short_vectors(QMat{{0, 1}, {1, 0}}, Rat(1)));
    CHECK_THROWS(short_vectors(QMat{{-1}}, Rat(1)));
    CHECK_THROWS(short_vectors(QMat::identity(2), Rat(-1)));
}

TEST_CASE("bound zero yields only the zero vector for definite forms") {
    auto got = short_vectors(QMat::identity(3), Rat(0));
    REQUIRE(got.size() == 1);
    CHECK(got[0] == std::vector<Int>{Int(0), Int(0), Int(0)});
}

TEST_CASE("matches the box oracle on random rational forms") {
    std::mt19937_64 gen(23);
    auto rnd = [&](int lo, int hi) { return int(gen() % (unsigned long long)(hi - lo + 1)) + lo; };
    int done = 0;
    while (done < 40) {
        int n = rnd(1, 3);
        // generate A random, Q = A^T A + small diagonal: positive definite
        QMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = Rat(rnd(-2, 2));
        QMat q = a.transpose() * a;
        for (int i = 0; i < n; ++i) q.at(i, i) += Rat(rnd(1, 3), rnd(1, 2));
        Rat bound = Rat(rnd(0, 30), rnd(1, 3));
        auto got = as_set(short_vectors(q, bound));
        // safe box: |v_i| <= sqrt(bound * (q^-1)_ii) <= sqrt(bound / min eigen)
        // use an easy certified width: bound / min diagonal of the LDL pivots
        // is awkward here, so take a generous fixed width and verify the
        // enumeration found nothing at the box edge
        long width = 12;
        auto expect = box_oracle(q, bound, width);
        bool edge_hit = false;
        for (const auto& v : expect)
            for (const Int& x : v)
                if (x == width || x == -width) edge_hit = true;
        if (edge_hit) continue;  // box may be too small to be an oracle
        CHECK(got == expect);
        ++done;
    }
}
