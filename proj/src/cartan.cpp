#include "clusterdt/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "clusterdt/errors.hpp"
#include "clusterdt/instrument.hpp"

namespace clusterdt::roots {

namespace {

// Edges of the Dynkin diagram as unordered pairs of 1-based vertices.
// Chains are 1-2-...-n; the D and E diagrams branch as listed.
std::vector<std::pair<int, int>> diagram_edges(Family family, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 2, n - 1);
        edges.emplace_back(n - 2, n);
        break;
    case Family::E:
        // Branch vertex 3 carries the short leaf 4; the long arm runs
        // 3-5-6(-7)(-8).
        edges = {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}};
        if (n >= 7) edges.emplace_back(6, 7);
        if (n >= 8) edges.emplace_back(7, 8);
        break;
    }
    return edges;
}

bool rank_supported(Family family, int rank) {
    switch (family) {
    case Family::A: return rank >= 1 && rank <= 12;
    case Family::B: return rank >= 2 && rank <= 8;
    case Family::C: return rank >= 3 && rank <= 8;
    case Family::D: return rank >= 4 && rank <= 8;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    }
    return false;
}

int coxeter_number_for(Family family, int n) {
    switch (family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
    }
    return 0;
}

std::vector<int> degrees_for(Family family, int n) {
    std::vector<int> d;
    switch (family) {
    case Family::A:
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case Family::B:
    case Family::C:
        for (int i = 2; i <= 2 * n; i += 2) d.push_back(i);
        break;
    case Family::D:
        for (int i = 2; i <= 2 * n - 2; i += 2) d.push_back(i);
        d.push_back(n);
        std::sort(d.begin(), d.end());
        break;
    case Family::E:
        if (n == 6) d = {2, 5, 6, 8, 9, 12};
        else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Family::F:
        d = {2, 6, 8, 12};
        break;
    case Family::G:
        d = {2, 6};
        break;
    }
    return d;
}

bool minus_one_for(Family family, int n) {
    switch (family) {
    case Family::A: return n == 1;
    case Family::B:
    case Family::C: return true;
    case Family::D: return n % 2 == 0;
    case Family::E: return n != 6;
    case Family::F:
    case Family::G: return true;
    }
    return false;
}

} // namespace

char family_letter(Family family) {
    switch (family) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    }
    return '?';
}

std::string CartanSpec::name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

CartanSpec cartan_matrix(Family family, int rank) {
    instrument::bump("cartan_matrix");
    if (!rank_supported(family, rank)) {
        throw InvalidTypeError("unsupported type " + std::string(1, family_letter(family)) +
                               std::to_string(rank));
    }

    const int n = rank;
    Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
    for (auto [i, j] : diagram_edges(family, n)) {
        a(i - 1, j - 1) = -1;
        a(j - 1, i - 1) = -1;
    }

    // Multiple bonds.  The entry a(i,j) scales how vertex j enters the
    // equations indexed by i, so the double and triple bonds sit at fixed
    // positions of the chain.
    switch (family) {
    case Family::B: a(n - 1, n - 2) = -2; break;
    case Family::C: a(n - 2, n - 1) = -2; break;
    case Family::F: a(1, 2) = -2; break;
    case Family::G: a(1, 0) = -3; break;
    default: break;
    }

    CartanSpec spec;
    spec.family = family;
    spec.rank = n;
    spec.cartan = std::move(a);
    spec.coxeter_number = coxeter_number_for(family, n);
    spec.degrees = degrees_for(family, n);
    spec.minus_one = minus_one_for(family, n);
    return spec;
}

CartanSpec parse_type(std::string_view name) {
    std::string trimmed;
    for (char c : name) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.size() < 2) {
        throw InvalidTypeError("cannot parse type name '" + std::string(name) + "'");
    }

    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(trimmed[0])));
    Family family;
    switch (letter) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default:
        throw InvalidTypeError("unknown family letter in '" + std::string(name) + "'");
    }

    std::string digits = trimmed.substr(1);
    if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        throw InvalidTypeError("cannot parse rank in '" + std::string(name) + "'");
    }
    if (digits.size() > 3) {
        throw InvalidTypeError("rank out of range in '" + std::string(name) + "'");
    }
    return cartan_matrix(family, std::stoi(digits));
}

std::vector<CartanSpec> all_supported() {
    std::vector<CartanSpec> out;
    for (int n = 1; n <= 12; ++n) out.push_back(cartan_matrix(Family::A, n));
    for (int n = 2; n <= 8; ++n) out.push_back(cartan_matrix(Family::B, n));
    for (int n = 3; n <= 8; ++n) out.push_back(cartan_matrix(Family::C, n));
    for (int n = 4; n <= 8; ++n) out.push_back(cartan_matrix(Family::D, n));
    for (int n = 6; n <= 8; ++n) out.push_back(cartan_matrix(Family::E, n));
    out.push_back(cartan_matrix(Family::F, 4));
    out.push_back(cartan_matrix(Family::G, 2));
    return out;
}

Eigen::VectorXi symmetrizer(const Eigen::MatrixXi& cartan) {
    const int n = static_cast<int>(cartan.rows());
    if (cartan.cols() != n) throw InternalCheckError("symmetrizer: matrix not square");

    // Propagate rational weights along nonzero off-diagonal entries:
    // d_i * a(i,j) = d_j * a(j,i) forces d_j/d_i = a(i,j)/a(j,i).
    std::vector<long long> num(n, 0), den(n, 0);
    std::vector<int> stack;
    num[0] = 1;
    den[0] = 1;
    stack.push_back(0);
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || cartan(i, j) == 0) continue;
            long long nj = num[i] * cartan(i, j);
            long long dj = den[i] * cartan(j, i);
            if (dj < 0) { nj = -nj; dj = -dj; }
            long long g = std::gcd(std::abs(nj), dj);
            if (g > 0) { nj /= g; dj /= g; }
            if (den[j] == 0) {
                num[j] = nj;
                den[j] = dj;
                stack.push_back(j);
            } else if (num[j] * dj != nj * den[j]) {
                throw InternalCheckError("symmetrizer: inconsistent ratios");
            }
        }
    }

    long long lcm_den = 1;
    for (int i = 0; i < n; ++i) {
        if (den[i] == 0) throw InternalCheckError("symmetrizer: diagram not connected");
        lcm_den = std::lcm(lcm_den, den[i]);
    }
    Eigen::VectorXi d(n);
    long long overall_gcd = 0;
    for (int i = 0; i < n; ++i) {
        long long v = num[i] * (lcm_den / den[i]);
        if (v <= 0) throw InternalCheckError("symmetrizer: nonpositive weight");
        overall_gcd = std::gcd(overall_gcd, v);
        d(i) = static_cast<int>(v);
    }
    for (int i = 0; i < n; ++i) d(i) = static_cast<int>(d(i) / overall_gcd);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (static_cast<long long>(d(i)) * cartan(i, j) !=
                static_cast<long long>(d(j)) * cartan(j, i)) {
                throw InternalCheckError("symmetrizer: result does not symmetrize");
            }
        }
    }
    return d;
}

RootSystem enumerate_positive_roots(const CartanSpec& spec) {
    instrument::bump("enumerate_positive_roots");
    const int n = spec.rank;
    const Eigen::MatrixXi& a = spec.cartan;

    auto key = [n](const Eigen::VectorXi& v) {
        std::vector<int> k(n);
        for (int i = 0; i < n; ++i) k[i] = v(i);
        return k;
    };

    std::set<std::vector<int>> seen;
    std::vector<Eigen::VectorXi> current;
    RootSystem rs;
    rs.simple_rank = n;

    for (int i = 0; i < n; ++i) {
        Eigen::VectorXi alpha = Eigen::VectorXi::Zero(n);
        alpha(i) = 1;
        seen.insert(key(alpha));
        current.push_back(alpha);
        rs.positive_roots.push_back(alpha);
        rs.heights.push_back(1);
    }

    // Height-by-height closure.  For beta of height m and simple direction
    // i, beta + alpha_i is a root iff the string count p - <beta, alpha_i^v>
    // is at least 1, where p is how far the string extends downward.  All
    // lower-height roots are already in `seen`, so the downward scan is a
    // pure membership test.
    int height = 1;
    while (!current.empty()) {
        std::vector<Eigen::VectorXi> next;
        for (const auto& beta : current) {
            Eigen::VectorXi pairing = a * beta;
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Eigen::VectorXi down = beta;
                while (true) {
                    down(i) -= 1;
                    if (down(i) < 0 || !seen.count(key(down))) break;
                    ++p;
                }
                if (p - pairing(i) >= 1) {
                    Eigen::VectorXi up = beta;
                    up(i) += 1;
                    if (seen.insert(key(up)).second) {
                        next.push_back(up);
                        rs.positive_roots.push_back(up);
                        rs.heights.push_back(height + 1);
                    }
                }
            }
        }
        current = std::move(next);
        ++height;
    }

    const int expected = n * spec.coxeter_number / 2;
    if (static_cast<int>(rs.positive_roots.size()) != expected) {
        throw InternalCheckError("root enumeration for " + spec.name() + " found " +
                                 std::to_string(rs.positive_roots.size()) + " roots, expected " +
                                 std::to_string(expected));
    }
    return rs;
}

std::vector<KostantRow> kostant_counts(const CartanSpec& spec, const RootSystem& roots) {
    instrument::bump("kostant_counts");
    const int h = spec.coxeter_number;
    std::vector<KostantRow> rows;
    rows.reserve(h + 1);
    for (int j = 1; j <= h + 1; ++j) {
        KostantRow row;
        row.j = j;
        row.lhs = static_cast<int>(
            std::count_if(spec.degrees.begin(), spec.degrees.end(), [j](int d) { return d >= j + 1; }));
        row.rhs = static_cast<int>(
            std::count(roots.heights.begin(), roots.heights.end(), j));
        rows.push_back(row);
    }
    return rows;
}

CountData count_formulas(const CartanSpec& spec) {
    instrument::bump("count_formulas");
    const int n = spec.rank;
    const int h = spec.coxeter_number;

    long long sum_d = std::accumulate(spec.degrees.begin(), spec.degrees.end(), 0LL);
    if (sum_d != static_cast<long long>(n) * h / 2 + n) {
        throw InternalCheckError("degree sum mismatch for " + spec.name());
    }

    // Exact rational product of (d + h)/d with stepwise reduction; the
    // supported types stay far below the signed 64-bit range this way.
    long long num = 1, den = 1;
    for (int d : spec.degrees) {
        long long top = d + h, bot = d;
        long long g = std::gcd(top, bot);
        top /= g; bot /= g;
        g = std::gcd(num, bot);
        num /= g; bot /= g;
        g = std::gcd(top, den);
        top /= g; den /= g;
        if (num > std::numeric_limits<long long>::max() / top) {
            throw NumericError("cluster count overflow for " + spec.name());
        }
        num *= top;
        den *= bot;
    }
    if (den != 1) {
        throw InternalCheckError("cluster count for " + spec.name() + " is not an integer");
    }

    CountData out;
    out.num_cluster_vars = sum_d;
    out.num_clusters = num;
    return out;
}

} // namespace clusterdt::roots
