#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "clusterdt/cartan.hpp"
#include "clusterdt/errors.hpp"

using namespace clusterdt;
using roots::CartanSpec;
using roots::Family;

TEST_CASE("cartan matrices carry the multiple bond in the fixed position") {
    CartanSpec g2 = roots::cartan_matrix(Family::G, 2);
    CHECK(g2.cartan(0, 0) == 2);
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);
    CHECK(g2.cartan(1, 1) == 2);

    CartanSpec b2 = roots::cartan_matrix(Family::B, 2);
    CHECK(b2.cartan(0, 1) == -1);
    CHECK(b2.cartan(1, 0) == -2);

    CartanSpec b4 = roots::cartan_matrix(Family::B, 4);
    CHECK(b4.cartan(3, 2) == -2);
    CHECK(b4.cartan(2, 3) == -1);

    CartanSpec c4 = roots::cartan_matrix(Family::C, 4);
    CHECK(c4.cartan(2, 3) == -2);
    CHECK(c4.cartan(3, 2) == -1);

    CartanSpec f4 = roots::cartan_matrix(Family::F, 4);
    CHECK(f4.cartan(1, 2) == -2);
    CHECK(f4.cartan(2, 1) == -1);
}

TEST_CASE("cartan matrices have zero entries exactly off the Dynkin edges") {
    // D5 under the labeling used here: chain 1-2-3 with 4 and 5 attached
    // to vertex 3.
    CartanSpec d5 = roots::cartan_matrix(Family::D, 5);
    CHECK(d5.cartan(3, 4) == 0);
    CHECK(d5.cartan(2, 3) == -1);
    CHECK(d5.cartan(2, 4) == -1);

    // E6 has its branch at vertex 3 (0-based index 2).
    CartanSpec e6 = roots::cartan_matrix(Family::E, 6);
    int edges = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (e6.cartan(i, j) != 0) ++edges;
    CHECK(edges == 5);
    CHECK(e6.cartan(2, 3) == -1);
    CHECK(e6.cartan(2, 4) == -1);
}

TEST_CASE("parse_type accepts case and underscore variants") {
    CHECK(roots::parse_type("A3").name() == "A3");
    CHECK(roots::parse_type("a3").name() == "A3");
    CHECK(roots::parse_type("E_8").name() == "E8");
    CHECK(roots::parse_type("f4").name() == "F4");
    CHECK(roots::parse_type("b2").rank == 2);
}

TEST_CASE("parse_type rejects malformed and out-of-range names") {
    CHECK_THROWS_AS(roots::parse_type("A13"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("A0"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("B1"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("B9"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("C2"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("D3"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("D9"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("E5"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("E9"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("F5"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("G3"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("H4"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type(""), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("A"), InvalidTypeError);
    CHECK_THROWS_AS(roots::parse_type("7"), InvalidTypeError);
}

TEST_CASE("the supported list covers exactly the advertised 35 types") {
    std::vector<CartanSpec> all = roots::all_supported();
    CHECK(all.size() == 35);
    std::set<std::string> names;
    for (const CartanSpec& spec : all) names.insert(spec.name());
    CHECK(names.size() == 35);
    CHECK(names.count("A1") == 1);
    CHECK(names.count("A12") == 1);
    CHECK(names.count("B8") == 1);
    CHECK(names.count("C3") == 1);
    CHECK(names.count("D4") == 1);
    CHECK(names.count("E6") == 1);
    CHECK(names.count("G2") == 1);
}

TEST_CASE("degrees and coxeter numbers match the classical tables") {
    auto degrees_of = [](const char* name) { return roots::parse_type(name).degrees; };

    CHECK(degrees_of("A4") == std::vector<int>{2, 3, 4, 5});
    CHECK(roots::parse_type("A4").coxeter_number == 5);

    CHECK(degrees_of("B3") == std::vector<int>{2, 4, 6});
    CHECK(degrees_of("C5") == std::vector<int>{2, 4, 6, 8, 10});
    CHECK(roots::parse_type("C5").coxeter_number == 10);

    CHECK(degrees_of("D4") == std::vector<int>{2, 4, 4, 6});
    CHECK(degrees_of("D5") == std::vector<int>{2, 4, 5, 6, 8});
    CHECK(roots::parse_type("D6").coxeter_number == 10);

    CHECK(degrees_of("E6") == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(degrees_of("E7") == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(degrees_of("E8") == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(roots::parse_type("E8").coxeter_number == 30);

    CHECK(degrees_of("F4") == std::vector<int>{2, 6, 8, 12});
    CHECK(degrees_of("G2") == std::vector<int>{2, 6});
}

TEST_CASE("the longest-element sign flag is set for the expected families") {
    auto minus_one = [](const char* name) { return roots::parse_type(name).minus_one; };

    CHECK(minus_one("A1"));
    CHECK_FALSE(minus_one("A2"));
    CHECK_FALSE(minus_one("A5"));
    CHECK(minus_one("B2"));
    CHECK(minus_one("B8"));
    CHECK(minus_one("C3"));
    CHECK(minus_one("D4"));
    CHECK_FALSE(minus_one("D5"));
    CHECK(minus_one("D6"));
    CHECK_FALSE(minus_one("D7"));
    CHECK(minus_one("D8"));
    CHECK_FALSE(minus_one("E6"));
    CHECK(minus_one("E7"));
    CHECK(minus_one("E8"));
    CHECK(minus_one("F4"));
    CHECK(minus_one("G2"));
}

TEST_CASE("symmetrizer makes D*A symmetric with minimal positive entries") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        Eigen::VectorXi d = roots::symmetrizer(spec.cartan);
        REQUIRE(d.size() == spec.rank);
        CHECK(d.minCoeff() >= 1);
        Eigen::MatrixXi da = d.asDiagonal() * spec.cartan;
        CHECK(da == da.transpose().eval());
        // Minimality: the gcd over all entries is one.
        int g = 0;
        for (int i = 0; i < d.size(); ++i) g = std::gcd(g, d(i));
        CHECK(g == 1);
    }
    CHECK(roots::symmetrizer(roots::parse_type("G2").cartan) == Eigen::Vector2i(3, 1));
    CHECK(roots::symmetrizer(roots::parse_type("A3").cartan) == Eigen::Vector3i(1, 1, 1));
}

TEST_CASE("positive roots of A2 are the two simple roots and their sum") {
    roots::RootSystem rs = roots::enumerate_positive_roots(roots::parse_type("A2"));
    REQUIRE(rs.positive_roots.size() == 3);
    CHECK(rs.heights == std::vector<int>{1, 1, 2});
    CHECK(rs.positive_roots[2] == Eigen::Vector2i(1, 1));
}

TEST_CASE("positive roots of G2 realize heights 1 through 5") {
    roots::RootSystem rs = roots::enumerate_positive_roots(roots::parse_type("G2"));
    REQUIRE(rs.positive_roots.size() == 6);
    CHECK(rs.heights == std::vector<int>{1, 1, 2, 3, 4, 5});
    // The highest root combines the long simple root twice with the short
    // one three times.
    Eigen::VectorXi highest = rs.positive_roots.back();
    CHECK(highest.sum() == 5);
    CHECK(highest.minCoeff() == 2);
    CHECK(highest.maxCoeff() == 3);
}

TEST_CASE("every type has n*h/2 positive roots") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        roots::RootSystem rs = roots::enumerate_positive_roots(spec);
        CHECK(static_cast<int>(rs.positive_roots.size()) ==
              spec.rank * spec.coxeter_number / 2);
        CHECK(rs.heights.size() == rs.positive_roots.size());
    }
}

TEST_CASE("height counts and degree counts agree row by row") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        roots::RootSystem rs = roots::enumerate_positive_roots(spec);
        for (const roots::KostantRow& row : roots::kostant_counts(spec, rs)) {
            CAPTURE(row.j);
            CHECK(row.lhs == row.rhs);
        }
    }
}

TEST_CASE("cluster counts match the known small values") {
    auto counts = [](const char* name) { return roots::count_formulas(roots::parse_type(name)); };

    CHECK(counts("A1").num_cluster_vars == 2);
    CHECK(counts("A1").num_clusters == 2);
    CHECK(counts("A2").num_cluster_vars == 5);
    CHECK(counts("A2").num_clusters == 5);
    CHECK(counts("A3").num_cluster_vars == 9);
    CHECK(counts("A3").num_clusters == 14);
    CHECK(counts("A4").num_clusters == 42);
    CHECK(counts("B2").num_cluster_vars == 6);
    CHECK(counts("B2").num_clusters == 6);
    CHECK(counts("G2").num_cluster_vars == 8);
    CHECK(counts("G2").num_clusters == 8);
    CHECK(counts("D4").num_clusters == 50);
    CHECK(counts("E8").num_clusters == 25080);
}

TEST_CASE("cluster variable count equals n(h+2)/2 for every type") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        roots::CountData counts = roots::count_formulas(spec);
        CHECK(counts.num_cluster_vars ==
              static_cast<long long>(spec.rank) * (spec.coxeter_number + 2) / 2);
        long long degree_sum = std::accumulate(spec.degrees.begin(), spec.degrees.end(), 0LL);
        CHECK(counts.num_cluster_vars == degree_sum);
    }
}
