#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/census.hpp"
#include "cremona/cremap.hpp"
#include "cremona/families.hpp"
#include "cremona/glnz.hpp"
#include "cremona/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotBirational = 3;
constexpr int kExitResource = 4;

using nlohmann::json;

cremona::IntMatrix load_matrix(const std::string& path, bool transpose) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open matrix file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    cremona::IntMatrix m = cremona::parse_matrix(buffer.str());
    return transpose ? m.transposed() : m;
}

// Loads a log-matrix, reducing on ingestion with a notice when the degree drops.
cremona::MonomialMap load_map(const std::string& path, bool transpose) {
    const cremona::IntMatrix raw = load_matrix(path, transpose);
    std::int64_t raw_sum = 0;
    for (std::size_t i = 0; i < raw.rows(); ++i)
        raw_sum += raw(i, 0);
    auto map = cremona::MonomialMap::from_log_matrix(raw);
    if (map.degree() != raw_sum)
        std::cerr << "notice: input was not reduced; degree dropped from " << raw_sum << " to "
                  << map.degree() << "\n";
    return map;
}

json matrix_json(const cremona::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Dense over the observed range, so zero-frequency rows inside it (the gaps)
// appear explicitly, matching the published table layout.
std::map<std::int64_t, std::uint64_t> dense_histogram(const cremona::DegreeHistogram& h) {
    std::map<std::int64_t, std::uint64_t> out;
    if (h.counts.empty())
        return out;
    const std::int64_t lo = h.counts.begin()->first;
    const std::int64_t hi = h.counts.rbegin()->first;
    for (std::int64_t dp = lo; dp <= hi; ++dp) {
        const auto it = h.counts.find(dp);
        out[dp] = it == h.counts.end() ? 0 : it->second;
    }
    return out;
}

json histogram_json(const cremona::DegreeHistogram& h) {
    json out = json::array();
    for (const auto& [dp, count] : dense_histogram(h))
        out.push_back(json{{"d_prime", dp}, {"count", count}});
    return out;
}

int run_check(const std::string& path, bool transpose, const std::string& format) {
    cremona::IntMatrix raw = load_matrix(path, transpose);
    bool stochastic = raw.is_square();
    std::int64_t first_sum = 0;
    for (std::size_t j = 0; stochastic && j < raw.cols(); ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < raw.rows(); ++i) {
            if (raw(i, j) < 0)
                stochastic = false;
            s += raw(i, j);
        }
        if (j == 0)
            first_sum = s;
        else if (s != first_sum)
            stochastic = false;
    }
    if (!stochastic) {
        if (format == "json")
            std::cout << json{{"stochastic", false}}.dump() << "\n";
        else
            std::cout << "stochastic\tno\n";
        return kExitInvalidInput;
    }
    const auto map = cremona::MonomialMap::from_log_matrix(raw);
    const std::int64_t lattice_det = map.lattice_matrix().det();
    const bool birational = map.is_birational();
    if (format == "json") {
        std::cout << json{{"stochastic", true},
                          {"degree", map.degree()},
                          {"lattice_det", lattice_det},
                          {"birational", birational}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "stochastic\tyes\n"
                  << "degree\t" << map.degree() << "\n"
                  << "lattice_det\t" << lattice_det << "\n"
                  << "birational\t" << (birational ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_invert(const std::string& path, bool transpose, const std::string& format) {
    const auto map = load_map(path, transpose);
    const auto result = cremona::invert(map);
    if (format == "json") {
        std::cout << json{{"inverse", matrix_json(result.inverse.log_matrix())},
                          {"d_prime", result.inverse_degree}}
                         .dump()
                  << "\n";
    } else {
        std::cout << cremona::to_text(result.inverse.log_matrix());
        std::cout << "# d_prime\t" << result.inverse_degree << "\n";
    }
    return kExitOk;
}

int run_gln(const std::string& path, bool transpose, const std::string& format) {
    cremona::UnimodularMatrix g(load_matrix(path, transpose));
    const auto map = cremona::to_cremona(g);
    const std::int64_t d = cremona::degree_of(g);
    const std::int64_t d_prime = cremona::degree_of(g.inverse());
    if (format == "json") {
        std::cout << json{{"log_matrix", matrix_json(map.log_matrix())},
                          {"d", d},
                          {"d_prime", d_prime}}
                         .dump()
                  << "\n";
    } else {
        std::cout << cremona::to_text(map.log_matrix());
        std::cout << "# d\t" << d << "\n# d_prime\t" << d_prime << "\n";
    }
    return kExitOk;
}

int run_enumerate(std::size_t n, std::int64_t d, unsigned jobs, const std::string& format) {
    const auto report = cremona::enumerate_maps(n, d, jobs);
    if (format == "json") {
        std::cout << json{{"n", report.n},
                          {"d", report.d},
                          {"combinations", report.total_combinations},
                          {"surviving", report.surviving},
                          {"histogram", histogram_json(report.histogram)},
                          {"gaps", report.gaps},
                          {"min_d_prime", report.min_d_prime},
                          {"max_d_prime", report.max_d_prime}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    for (const auto& [dp, count] : dense_histogram(report.histogram))
        std::cout << dp << "\t" << count << "\n";
    std::cout << "# total\t" << report.surviving << "\n";
    std::cout << "# combinations\t" << report.total_combinations << "\n";
    std::cout << "# gaps\t";
    for (std::size_t i = 0; i < report.gaps.size(); ++i)
        std::cout << (i ? "," : "") << report.gaps[i];
    std::cout << "\n";
    return kExitOk;
}

int run_sample(const cremona::WalkConfig& config, std::uint64_t steps, const std::string& format) {
    cremona::RandomWalk walk(config);
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> occupancy;
    for (std::uint64_t s = 0; s < steps; ++s) {
        const auto sample = walk.next();
        ++occupancy[{sample.degree, sample.inverse_degree}];
    }
    if (format == "json") {
        json cells = json::array();
        for (const auto& [key, count] : occupancy)
            cells.push_back(json{{"d", key.first}, {"d_prime", key.second}, {"count", count}});
        std::cout << json{{"steps", steps},
                          {"restarts", walk.restarts()},
                          {"overflow_restarts", walk.overflow_restarts()},
                          {"occupancy", std::move(cells)}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    for (const auto& [key, count] : occupancy)
        std::cout << key.first << "\t" << key.second << "\t" << count << "\n";
    std::cout << "# steps\t" << steps << "\n";
    std::cout << "# restarts\t" << walk.restarts() << "\n";
    std::cout << "# overflow_restarts\t" << walk.overflow_restarts() << "\n";
    return kExitOk;
}

int run_family(const std::string& name, std::size_t n, std::int64_t d, const std::string& format) {
    cremona::FamilySpec spec;
    if (name == "triangular")
        spec.name = cremona::Family::triangular;
    else if (name == "chain-loop")
        spec.name = cremona::Family::chain_loop;
    else if (name == "classic-quadratic")
        spec.name = cremona::Family::classic_quadratic;
    else
        throw std::invalid_argument("unknown family: " + name);
    spec.n = n;
    spec.d = d;
    const auto map = cremona::build(spec);
    const std::int64_t predicted = cremona::predicted_inverse_degree(spec);
    if (format == "json") {
        std::cout << json{{"log_matrix", matrix_json(map.log_matrix())},
                          {"degree", map.degree()},
                          {"predicted_d_prime", predicted}}
                         .dump()
                  << "\n";
    } else {
        std::cout << cremona::to_text(map.log_matrix());
        std::cout << "# degree\t" << map.degree() << "\n# predicted_d_prime\t" << predicted << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for monomial Cremona transformations"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string format = "tsv";
    std::string family_name = "triangular";
    bool transpose = false;
    std::size_t n = 3;
    std::int64_t d = 2;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::uint64_t steps = 1000;
    std::int64_t dmax = 60;
    std::int64_t max_multiple = 4;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"tsv", "json"}));
    };
    auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrix_path, "Matrix file (plain or JSON)")->required();
        cmd->add_flag("--transpose", transpose, "Transpose the matrix after parsing");
    };

    auto* check = app.add_subcommand("check", "Validate a log-matrix and test birationality");
    add_matrix(check);
    add_format(check);

    auto* invert = app.add_subcommand("invert", "Invert a monomial Cremona map");
    add_matrix(invert);
    add_format(invert);

    auto* gln = app.add_subcommand("gln", "Convert a unimodular matrix to its log-matrix A_g");
    add_matrix(gln);
    add_format(gln);

    auto* enumerate = app.add_subcommand("enumerate", "Census of all degree-d maps of P^n");
    enumerate->add_option("--n", n, "Projective dimension")->required();
    enumerate->add_option("--d", d, "Degree")->required();
    enumerate->add_option("--jobs", jobs, "Worker count");
    add_format(enumerate);

    auto* sample = app.add_subcommand("sample", "Random unimodular walk sampling of (d, d')");
    sample->add_option("--n", n, "Lattice dimension")->required();
    sample->add_option("--steps", steps, "Samples to emit");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--dmax", dmax, "Degree ceiling triggering restart");
    sample->add_option("--max-multiple", max_multiple, "Bound on the random multiple");
    add_format(sample);

    auto* family = app.add_subcommand("family", "Build a named construction");
    family->add_option("--family", family_name, "triangular | chain-loop | classic-quadratic")
        ->required();
    family->add_option("--n", n, "Projective dimension")->required();
    family->add_option("--d", d, "Degree (ignored where the family forces it)");
    add_format(family);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(matrix_path, transpose, format);
        if (invert->parsed())
            return run_invert(matrix_path, transpose, format);
        if (gln->parsed())
            return run_gln(matrix_path, transpose, format);
        if (enumerate->parsed())
            return run_enumerate(n, d, jobs, format);
        if (sample->parsed()) {
            cremona::WalkConfig config{n, max_multiple, dmax, seed};
            return run_sample(config, steps, format);
        }
        if (family->parsed())
            return run_family(family_name, n, d, format);
    } catch (const cremona::NotBirationalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotBirational;
    } catch (const cremona::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
