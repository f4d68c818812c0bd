// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "stabrank/count.hpp"
#include "stabrank/oracle.hpp"
#include "stabrank/simulate.hpp"

namespace stabrank {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collected output of one verb: human-readable lines plus the same facts for --json.
struct Report {
    std::ostringstream text;
    json result = json::object();
    json timings = json::object();
    int exit_code = kExitOk;
};

BitVector parse_bits(const std::string &bits, std::size_t n, const std::string &flag) {
    if (bits.empty()) {
        return BitVector(n);
    }
    if (bits.size() != n) {
        throw ParseError(flag + " has " + std::to_string(bits.size()) + " bits, circuit has " + std::to_string(n) +
                         " qubits");
    }
    return BitVector::from_string(bits);
}

std::string extension_of(const std::string &path) {
    return std::filesystem::path(path).extension().string();
}

// Gaussian elimination on one byte per entry, for benchmarking against the packed kernels.
std::size_t naive_rank(const BitMatrix &m) {
    std::vector<std::vector<uint8_t>> a(m.rows(), std::vector<uint8_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            a[i][j] = m.get(i, j);
        }
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); col++) {
        std::size_t p = r;
        while (p < m.rows() && !a[p][col]) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < m.rows(); i++) {
            if (i != r && a[i][col]) {
                for (std::size_t j = col; j < m.cols(); j++) {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        r++;
    }
    return r;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t j = 0; j < cols; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

Circuit random_circuit(std::size_t n, std::size_t gates, std::mt19937_64 &rng) {
    Circuit c(n);
    static constexpr GateKind kinds[] = {GateKind::H,  GateKind::S,  GateKind::Sdg,  GateKind::Z,
                                         GateKind::X,  GateKind::Y,  GateKind::CZ,   GateKind::CNOT};
    for (std::size_t k = 0; k < gates; k++) {
        GateKind kind = kinds[rng() % std::size(kinds)];
        auto q0 = static_cast<uint32_t>(rng() % n);
        if (is_two_qubit(kind)) {
            if (n < 2) {
                continue;
            }
            auto q1 = static_cast<uint32_t>(rng() % (n - 1));
            c.append(kind, q0, q1 >= q0 ? q1 + 1 : q1);
        } else {
            c.append(kind, q0);
        }
    }
    return c;
}

bool close(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) < 1e-10;
}

void verb_rank(const std::string &path, bool via_simulation, Report &rep) {
    BitMatrix m = read_f2_file(path);
    auto t0 = Clock::now();
    std::size_t r = via_simulation ? rank_via_simulation(m) : rank(m);
    rep.timings["rank_ms"] = ms_since(t0);
    rep.result["rank"] = r;
    rep.result["method"] = via_simulation ? "simulation" : "elimination";
    rep.text << r << "\n";
}

void verb_simulate(const std::string &path, const std::string &in_bits, const std::string &out_bits, bool prob,
                   bool want_rank, Report &rep) {
    Circuit c = read_stab_file(path);
    BitVector x = parse_bits(in_bits, c.num_qubits(), "--in");
    BitVector z = parse_bits(out_bits, c.num_qubits(), "--out");
    if (!c.is_stabilizer()) {
        throw PromiseViolation("simulate: CS gates are outside the exact stabilizer path; use 'verify'");
    }
    auto t0 = Clock::now();
    DyadicAmplitude a = amplitude(c, x, z);
    rep.timings["amplitude_ms"] = ms_since(t0);
    rep.result["amplitude"] = a.to_string();
    rep.text << "amplitude: " << a.to_string() << "\n";
    if (prob || want_rank) {
        auto t1 = Clock::now();
        Probability p = probability(c, x, z);
        rep.timings["probability_ms"] = ms_since(t1);
        rep.result["probability"] = p.to_string();
        rep.text << "probability: " << p.to_string() << "\n";
        if (want_rank) {
            std::size_t r = rank_from_probability(p, c.num_qubits());
            rep.result["rank"] = r;
            rep.text << "rank: " << r << "\n";
        }
    }
}

void verb_count(const std::string &path, Report &rep) {
    Z4Matrix a = read_z4_file(path);
    auto t0 = Clock::now();
    NormalForm nf = normalize(a);
    Distribution d = exponential_sum(nf);
    rep.timings["count_ms"] = ms_since(t0);
    rep.result["n"] = nf.n;
    rep.result["rank"] = nf.r;
    rep.result["kind"] = nf.kind == FormKind::Alternating ? "alternating" : "non-alternating";
    rep.result["N0-N2"] = d.d0.to_string();
    rep.result["N1-N3"] = d.d1.to_string();
    rep.text << "N0-N2: " << d.d0.to_string() << "\n";
    rep.text << "N1-N3: " << d.d1.to_string() << "\n";
}

void verb_reduce(const std::string &path, const std::string &output, Report &rep) {
    BitMatrix m = read_f2_file(path);
    Circuit c = graph_to_circuit(rank_to_graph(m));
    std::ostringstream stab;
    write_stab(stab, c);
    rep.result["qubits"] = c.num_qubits();
    rep.result["gates"] = c.gates().size();
    if (output.empty()) {
        rep.text << stab.str();
    } else {
        std::ofstream f(output);
        if (!f) {
            throw ParseError("cannot write " + output);
        }
        f << stab.str();
        rep.result["output"] = output;
        rep.text << "wrote " << output << "\n";
    }
}

void verb_netzero(const std::string &path, bool use_oracle, Report &rep) {
    Graph g = read_graph_file(path);
    NetSign sign;
    std::string value;
    if (use_oracle) {
        NetClass nc = coloring_counts(g);
        sign = nc.sign;
        value = nc.a_value.to_string();
    } else {
        for (uint8_t w : g.loops()) {
            if (w & 1) {
                throw PromiseViolation("netzero: odd loop weights make a(G) non-real");
            }
        }
        // a(G) = <0|C_G|0>, the graph-state amplitude itself.
        BitVector zero(g.num_nodes());
        DyadicAmplitude a = amplitude(graph_to_circuit(g), zero, zero);
        sign = a.re.sign == 0 ? NetSign::Zero : (a.re.sign > 0 ? NetSign::Positive : NetSign::Negative);
        value = a.to_string();
    }
    rep.result["class"] = net_sign_name(sign);
    rep.result["a"] = value;
    rep.text << net_sign_name(sign) << "\n";
    rep.text << "a: " << value << "\n";
}

struct VerifyTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    void check(bool ok, const std::string &what, Report &rep) {
        (ok ? passed : failed)++;
        if (!ok) {
            rep.text << "FAIL " << what << "\n";
        }
    }
};

void verify_circuit(const Circuit &c, const std::vector<std::pair<BitVector, BitVector>> &cases,
                    const std::string &label, VerifyTally &tally, Report &rep) {
    for (const auto &[x, z] : cases) {
        std::string what = label + " in=" + x.to_string() + " out=" + z.to_string();
        std::complex<double> sv = statevector_amplitude(c, x, z);
        PhasePolynomial q = build_phase_polynomial(c, x, z, OutputMode::Fixed);
        tally.check(close(path_sum_amplitude(q), sv), what + " (path sum)", rep);
        if (c.is_stabilizer()) {
            DyadicAmplitude a = amplitude(c, x, z);
            tally.check(close(a.to_complex(), sv), what + " (amplitude)", rep);
            tally.check(probability(c, x, z) == squared_magnitude(a), what + " (probability)", rep);
        }
    }
}

std::vector<std::pair<BitVector, BitVector>> basis_cases(std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::pair<BitVector, BitVector>> cases;
    if (n <= 4) {
        for (uint64_t xs = 0; xs < (uint64_t{1} << n); xs++) {
            for (uint64_t zs = 0; zs < (uint64_t{1} << n); zs++) {
                BitVector x(n), z(n);
                for (std::size_t i = 0; i < n; i++) {
                    x.set(i, (xs >> i) & 1);
                    z.set(i, (zs >> i) & 1);
                }
                cases.emplace_back(std::move(x), std::move(z));
            }
        }
        return cases;
    }
    for (int k = 0; k < 32; k++) {
        BitVector x(n), z(n);
        for (std::size_t i = 0; i < n; i++) {
            x.set(i, rng() & 1);
            z.set(i, rng() & 1);
        }
        cases.emplace_back(std::move(x), std::move(z));
    }
    return cases;
}

void verify_file(const std::string &path, std::mt19937_64 &rng, VerifyTally &tally, Report &rep) {
    std::string ext = extension_of(path);
    if (ext == ".stab") {
        Circuit c = read_stab_file(path);
        if (c.num_qubits() > kMaxStatevectorQubits) {
            throw PromiseViolation("verify: " + path + " is too wide for the state-vector oracle");
        }
        verify_circuit(c, basis_cases(c.num_qubits(), rng), path, tally, rep);
    } else if (ext == ".z4") {
        Z4Matrix a = read_z4_file(path);
        CountVector cv = path_sum(a);
        Distribution d = count_form(a);
        tally.check(d.d0.to_int64() == cv.d0() && d.d1.to_int64() == cv.d1(), path + " (counts)", rep);
    } else if (ext == ".f2") {
        BitMatrix m = read_f2_file(path);
        std::size_t r = rank(m);
        tally.check(r == naive_rank(m), path + " (packed rank)", rep);
        tally.check(r == rank_via_simulation(m), path + " (rank via simulation)", rep);
    } else if (ext == ".graph") {
        Graph g = read_graph_file(path);
        NetClass nc = coloring_counts(g);
        BitVector zero(g.num_nodes());
        DyadicAmplitude a = amplitude(graph_to_circuit(g), zero, zero);
        tally.check(close(a.to_complex(), nc.a_value.to_double()), path + " (a(G) via amplitude)", rep);
        if (g.is_simple() && g.num_edges() <= kMaxPolymatroidEdges) {
            tally.check(polymatroid_sum(g) == nc.a_value, path + " (polymatroid sum)", rep);
        }
    } else {
        throw ParseError("verify: unknown file type '" + ext + "' for " + path);
    }
}

void verb_verify(const std::vector<std::string> &paths, std::size_t random, uint64_t seed, Report &rep) {
    std::mt19937_64 rng(seed);
    VerifyTally tally;
    auto t0 = Clock::now();
    for (const std::string &path : paths) {
        verify_file(path, rng, tally, rep);
    }
    for (std::size_t k = 0; k < random; k++) {
        std::size_t n = 1 + rng() % 8;
        Circuit c = random_circuit(n, rng() % 61, rng);
        verify_circuit(c, basis_cases(n, rng), "random circuit " + std::to_string(k), tally, rep);
    }
    rep.timings["verify_ms"] = ms_since(t0);
    rep.result["passed"] = tally.passed;
    rep.result["failed"] = tally.failed;
    rep.result["seed"] = seed;
    rep.text << "checks passed: " << tally.passed << ", failed: " << tally.failed << "\n";
    if (tally.failed > 0) {
        rep.exit_code = kExitContractViolation;
    }
}

void verb_bench(std::size_t n, uint64_t seed, bool skip_naive, Report &rep) {
    std::mt19937_64 rng(seed);
    BitMatrix m = random_matrix(n, n, rng);
    BitMatrix sym(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            if (m.get(i, j)) {
                sym.set(i, j);
                sym.set(j, i);
            }
        }
    }
    auto t0 = Clock::now();
    std::size_t r = rank(m);
    double packed = ms_since(t0);
    auto t1 = Clock::now();
    Pldlt dec = pldlt(sym);
    double decomposition = ms_since(t1);
    rep.result["n"] = n;
    rep.result["rank"] = r;
    rep.result["symmetric_rank"] = dec.diag.rank();
    rep.timings["packed_rank_ms"] = packed;
    rep.timings["pldlt_ms"] = decomposition;
    rep.text << "n: " << n << "\n";
    rep.text << "rank: " << r << " (packed elimination, " << packed << " ms)\n";
    rep.text << "pldlt: rank " << dec.diag.rank() << " (" << decomposition << " ms)\n";
    if (n <= 512) {
        auto t2 = Clock::now();
        std::size_t rs = rank_via_simulation(m);
        double pipeline = ms_since(t2);
        rep.timings["simulation_pipeline_ms"] = pipeline;
        rep.result["simulation_rank"] = rs;
        rep.text << "rank via simulation: " << rs << " (" << pipeline << " ms)\n";
    }
    if (!skip_naive) {
        auto t3 = Clock::now();
        std::size_t rn = naive_rank(m);
        double naive = ms_since(t3);
        rep.timings["naive_rank_ms"] = naive;
        rep.result["naive_rank"] = rn;
        rep.text << "naive rank: " << rn << " (byte elimination, " << naive << " ms)\n";
        if (rn != r) {
            rep.exit_code = kExitContractViolation;
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact strong simulation of stabilizer circuits via quadratic forms over Z4", "stabrank"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a JSON record {verb, input, result, timings}");

    std::string input;
    std::vector<std::string> inputs;
    std::string in_bits;
    std::string out_bits;
    std::string output;
    bool flag_a = false;
    bool flag_b = false;
    std::size_t size = 512;
    std::size_t random = 0;
    uint64_t seed = 1;

    auto *rank_cmd = app.add_subcommand("rank", "Print the F2 rank of a .f2 matrix");
    rank_cmd->add_option("matrix", input, "Matrix in .f2 format")->required();
    rank_cmd->add_flag("--via-simulation", flag_a, "Compute the rank through the graph-state probability");

    auto *sim_cmd = app.add_subcommand("simulate", "Exact amplitude <out|C|in> of a .stab circuit");
    sim_cmd->add_option("circuit", input, "Circuit in .stab format")->required();
    sim_cmd->add_option("--in", in_bits, "Input basis state as 0/1 characters (default all zeros)");
    sim_cmd->add_option("--out", out_bits, "Output basis state as 0/1 characters (default all zeros)");
    sim_cmd->add_flag("--prob", flag_a, "Also print Pr[C(in) = out]");
    sim_cmd->add_flag("--rank", flag_b, "Also print r with probability 2^(-2r)");

    auto *count_cmd = app.add_subcommand("count", "Print N0-N2 and N1-N3 of a .z4 quadratic form");
    count_cmd->add_option("form", input, "Form in .z4 format")->required();

    auto *reduce_cmd = app.add_subcommand("reduce", "Emit the graph-state circuit whose probability encodes the rank");
    reduce_cmd->add_option("matrix", input, "Matrix in .f2 format")->required();
    reduce_cmd->add_option("-o,--output", output, "Write the .stab here instead of stdout");

    auto *netzero_cmd = app.add_subcommand("netzero", "Classify a .graph as Zero, Positive or Negative");
    netzero_cmd->add_option("graph", input, "Graph in .graph format")->required();
    netzero_cmd->add_flag("--oracle", flag_a, "Enumerate colorings instead of simulating");

    auto *verify_cmd = app.add_subcommand("verify", "Cross-check fast paths against the brute-force oracles");
    verify_cmd->add_option("files", inputs, "Files (.stab, .z4, .f2, .graph) to check");
    verify_cmd->add_option("--random", random, "Number of random circuits to check");
    verify_cmd->add_option("--seed", seed, "Seed for random cases");

    auto *bench_cmd = app.add_subcommand("bench", "Time packed rank, PLDL^T and the pipeline against naive elimination");
    bench_cmd->add_option("--n", size, "Matrix size")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
    bench_cmd->add_option("--seed", seed, "Seed for the random matrix");
    bench_cmd->add_flag("--skip-naive", flag_a, "Skip the byte-per-entry elimination");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }

    CLI::App *cmd = app.get_subcommands().front();
    const std::string verb = cmd->get_name();
    Report rep;
    auto start = Clock::now();
    try {
        if (verb == "rank") {
            verb_rank(input, flag_a, rep);
        } else if (verb == "simulate") {
            verb_simulate(input, in_bits, out_bits, flag_a, flag_b, rep);
        } else if (verb == "count") {
            verb_count(input, rep);
        } else if (verb == "reduce") {
            verb_reduce(input, output, rep);
        } else if (verb == "netzero") {
            verb_netzero(input, flag_a, rep);
        } else if (verb == "verify") {
            verb_verify(inputs, random, seed, rep);
        } else {
            verb_bench(size, seed, flag_a, rep);
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitContractViolation;
    }
    rep.timings["total_ms"] = ms_since(start);

    if (as_json) {
        json record;
        record["verb"] = verb;
        record["input"] = verb == "verify" ? json(inputs) : json(input);
        record["result"] = rep.result;
        record["timings"] = rep.timings;
        out << record.dump(2) << "\n";
    } else {
        out << rep.text.str();
    }
    return rep.exit_code;
}

}  // namespace stabrank
