#include "fracrank/critval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fracrank/errors.hpp"
#include "fracrank/rng.hpp"

namespace fracrank {

namespace {

constexpr double kXiTol = 1e-12;

int case_order(DetCase c) {
    switch (c) {
        case DetCase::None: return 0;
        case DetCase::Const: return 1;
        case DetCase::Trend: return 2;
    }
    return 0;
}

std::string format_double_exact(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::invalid_argument("cv table: cannot parse " + what + " '" + s + "'");
    return v;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("cv table: cannot parse " + what + " '" + s + "'");
    return v;
}

}  // namespace

double quantile_type7(std::vector<double> sample, double prob) {
    if (sample.empty()) throw std::invalid_argument("quantile_type7: empty sample");
    if (!(prob >= 0.0 && prob <= 1.0))
        throw std::invalid_argument("quantile_type7: prob must be in [0,1]");
    std::sort(sample.begin(), sample.end());
    const std::size_t n = sample.size();
    const double h = static_cast<double>(n - 1) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    return sample[lo] + (h - static_cast<double>(lo)) * (sample[hi] - sample[lo]);
}

bool CriticalValueTable::has(DetCase det_case, double xi, std::size_t p_r) const {
    for (const auto& c : cells)
        if (c.det_case == det_case && c.p_r == p_r && std::abs(c.xi - xi) <= kXiTol)
            return true;
    return false;
}

double CriticalValueTable::lookup(DetCase det_case, double xi, std::size_t p_r) const {
    for (const auto& c : cells)
        if (c.det_case == det_case && c.p_r == p_r && std::abs(c.xi - xi) <= kXiTol)
            return c.cv;
    std::ostringstream os;
    os << "cv table (T=" << T << ", d1=" << d1 << ") has no entry for case "
       << to_string(det_case) << ", xi=" << xi << ", p-r=" << p_r
       << "; simulate one with the required grid (simulate-cv)";
    throw missing_critical_value(os.str());
}

std::vector<std::string> CriticalValueTable::monotonicity_violations() const {
    std::vector<std::string> out;
    auto describe = [](const Cell& c) {
        std::ostringstream os;
        os << to_string(c.det_case) << " xi=" << c.xi << " p-r=" << c.p_r
           << " cv=" << c.cv;
        return os.str();
    };
    for (const auto& a : cells) {
        for (const auto& b : cells) {
            // Tighter level => larger critical value.
            if (a.det_case == b.det_case && a.p_r == b.p_r && a.xi < b.xi - kXiTol &&
                a.cv < b.cv)
                out.push_back("xi ordering: " + describe(a) + " < " + describe(b));
            // More common trends => larger critical value.
            if (a.det_case == b.det_case && std::abs(a.xi - b.xi) <= kXiTol &&
                a.p_r > b.p_r && a.cv < b.cv)
                out.push_back("p-r ordering: " + describe(a) + " < " + describe(b));
            // Richer deterministics => larger critical value.
            if (case_order(a.det_case) > case_order(b.det_case) &&
                std::abs(a.xi - b.xi) <= kXiTol && a.p_r == b.p_r && a.cv < b.cv)
                out.push_back("case ordering: " + describe(a) + " < " + describe(b));
        }
    }
    return out;
}

CriticalValueTable simulate_cv_table(const CvSimConfig& config) {
    if (config.reps < 1000)
        throw std::invalid_argument("simulate_cv_table: need reps >= 1000");
    if (config.max_dim < 1) throw std::invalid_argument("simulate_cv_table: max_dim >= 1");
    if (!(config.d1 > 0.0)) throw std::invalid_argument("simulate_cv_table: d1 > 0");
    if (config.cases.empty() || config.levels.empty())
        throw std::invalid_argument("simulate_cv_table: empty cases or levels");
    for (double xi : config.levels)
        if (!(xi > 0.0 && xi < 1.0))
            throw std::invalid_argument("simulate_cv_table: levels must be in (0,1)");
    if (config.T < config.max_dim + 3)
        throw std::invalid_argument("simulate_cv_table: T too small for max_dim");
    const unsigned workers = std::max(1u, config.workers);

    const std::size_t n_cases = config.cases.size();
    // stats[case][q-1][rep]
    std::vector<std::vector<std::vector<double>>> stats(
        n_cases, std::vector<std::vector<double>>(config.max_dim,
                                                  std::vector<double>(config.reps)));

    auto run_chunk = [&](std::size_t lo, std::size_t hi) {
        const auto T = static_cast<Eigen::Index>(config.T);
        const auto q = static_cast<Eigen::Index>(config.max_dim);
        Eigen::MatrixXd walks(T, q);
        for (std::size_t r = lo; r < hi; ++r) {
            rng::GaussianSampler gauss(config.seed, r);
            for (Eigen::Index c = 0; c < q; ++c)
                for (Eigen::Index t = 0; t < T; ++t) walks(t, c) = gauss.next();
            for (Eigen::Index t = 1; t < T; ++t) walks.row(t) += walks.row(t - 1);
            for (std::size_t ci = 0; ci < n_cases; ++ci) {
                const auto lam = lambda_leading_dims(walks, config.d1,
                                                     config.cases[ci], config.max_dim);
                for (std::size_t k = 0; k < config.max_dim; ++k)
                    stats[ci][k][r] = lam[k];
            }
        }
    };

    if (workers == 1) {
        run_chunk(0, config.reps);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (config.reps + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = std::min<std::size_t>(w * chunk, config.reps);
            const std::size_t hi = std::min<std::size_t>(lo + chunk, config.reps);
            if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    CriticalValueTable table;
    table.d1 = config.d1;
    table.T = config.T;
    table.reps = config.reps;
    table.seed = config.seed;
    for (std::size_t ci = 0; ci < n_cases; ++ci)
        for (std::size_t k = 0; k < config.max_dim; ++k)
            for (double xi : config.levels)
                table.cells.push_back({config.cases[ci], xi, k + 1,
                                       quantile_type7(stats[ci][k], 1.0 - xi)});
    // Fixed output order: case, then xi descending (loosest first), then p-r.
    std::sort(table.cells.begin(), table.cells.end(),
              [](const CriticalValueTable::Cell& a, const CriticalValueTable::Cell& b) {
                  if (case_order(a.det_case) != case_order(b.det_case))
                      return case_order(a.det_case) < case_order(b.det_case);
                  if (std::abs(a.xi - b.xi) > kXiTol) return a.xi > b.xi;
                  return a.p_r < b.p_r;
              });
    return table;
}

void write_cv_table(const CriticalValueTable& table, std::ostream& out) {
    out << "case,T,d1,xi,p_r,cv,reps,seed\n";
    for (const auto& c : table.cells) {
        out << to_string(c.det_case) << ',' << table.T << ','
            << format_double_exact(table.d1) << ',' << format_double_exact(c.xi) << ','
            << c.p_r << ',' << format_double_exact(c.cv) << ',' << table.reps << ','
            << table.seed << '\n';
    }
}

void write_cv_table(const CriticalValueTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    write_cv_table(table, f);
    if (!f) throw std::runtime_error("failed while writing '" + path + "'");
}

CriticalValueTable read_cv_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("cv table: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "case,T,d1,xi,p_r,cv,reps,seed")
        throw std::invalid_argument("cv table: unexpected header '" + line + "'");

    CriticalValueTable table;
    bool first = true;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 8)
            throw std::invalid_argument("cv table: line " + std::to_string(line_no) +
                                        " has " + std::to_string(fields.size()) +
                                        " fields, expected 8");
        CriticalValueTable::Cell cell;
        cell.det_case = det_case_from_string(fields[0]);
        const auto T = static_cast<std::size_t>(parse_uint(fields[1], "T"));
        const double d1 = parse_double(fields[2], "d1");
        cell.xi = parse_double(fields[3], "xi");
        cell.p_r = static_cast<std::size_t>(parse_uint(fields[4], "p_r"));
        cell.cv = parse_double(fields[5], "cv");
        const auto reps = static_cast<std::size_t>(parse_uint(fields[6], "reps"));
        const auto seed = parse_uint(fields[7], "seed");
        if (first) {
            table.T = T;
            table.d1 = d1;
            table.reps = reps;
            table.seed = seed;
            first = false;
        } else if (T != table.T || d1 != table.d1 || reps != table.reps ||
                   seed != table.seed) {
            throw std::invalid_argument(
                "cv table: mixed regimes in one file (line " + std::to_string(line_no) +
                "); tables are specific to one (T, d1, reps, seed)");
        }
        table.cells.push_back(cell);
    }
    if (table.cells.empty()) throw std::invalid_argument("cv table: no rows");
    return table;
}

CriticalValueTable read_cv_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open cv table '" + path + "'");
    return read_cv_table(f);
}

}  // namespace fracrank
