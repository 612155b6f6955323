#include "rmdec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmdec/channel.hpp"
#include "rmdec/io.hpp"
#include "rmdec/pairs.hpp"

namespace rmdec {

namespace {

constexpr int kOk = 0;
constexpr int kDecodeFailure = 1;
constexpr int kUsageError = 2;

struct DecodeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads a whole input: the named file, or the fallback stream when no path
// was given.
std::string slurp(const std::string& path, std::istream& fallback) {
    std::ostringstream buf;
    if (path.empty()) {
        buf << fallback.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw FormatError("cannot open input file: " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

// All commands buffer their output and write it in one step at the end, so
// a failed command never leaves a partial file behind.
void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream file(path);
    if (!file) throw FormatError("cannot open output file: " + path);
    file << content;
}

BitVector require_full_word(const WordFileData& data, const char* command) {
    if (data.has_erasures())
        throw FormatError(std::string(command) + ": input word may not contain '?'");
    return data.word.values;
}

std::string format_csv(const ExperimentConfig& config, const TrialReport& report) {
    std::ostringstream out;
    out << "trial,independent,success,micros\n";
    for (const TrialRecord& t : report.trials)
        out << t.index << ',' << int(t.independent) << ',' << int(t.success) << ','
            << t.micros << '\n';
    char frac[128];
    std::snprintf(frac, sizeof frac,
                  " independence_fraction=%.6f success_fraction=%.6f",
                  report.independence_fraction(), report.success_fraction());
    out << "# aggregate trials=" << report.trials.size()
        << " independent=" << report.independent_count
        << " success=" << report.success_count << frac
        << " predicted_weight_bound="
        << predicted_weight_bound(config.m, config.r, config.epsilon) << '\n';
    return out.str();
}

std::string format_json(const ExperimentConfig& config, const TrialReport& report) {
    nlohmann::json j;
    const char* mode = config.mode == ChannelMode::fixed_weight ? "fixed"
                       : config.mode == ChannelMode::bsc        ? "bsc"
                                                                : "bec";
    j["config"] = {{"m", config.m},         {"r", config.r},
                   {"t", config.t},         {"trials", config.trials},
                   {"seed", config.seed},   {"mode", mode},
                   {"p", config.p},         {"epsilon", config.epsilon}};
    j["trials"] = nlohmann::json::array();
    for (const TrialRecord& t : report.trials)
        j["trials"].push_back({{"trial", t.index},
                               {"independent", t.independent},
                               {"success", t.success},
                               {"micros", t.micros}});
    j["aggregate"] = {
        {"trials", report.trials.size()},
        {"independent", report.independent_count},
        {"success", report.success_count},
        {"independence_fraction", report.independence_fraction()},
        {"success_fraction", report.success_fraction()},
        {"predicted_weight_bound",
         predicted_weight_bound(config.m, config.r, config.epsilon)}};
    return j.dump(2) + "\n";
}

struct CommandContext {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int run_params(int m, int r, CommandContext& ctx) {
    const RMCode code(m, r);
    ctx.out << "RM(" << m << "," << r << "): n=" << code.block_length()
            << " k=" << code.dimension() << " d=" << code.distance()
            << " rate=" << code.rate() << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Reed-Muller error decoding toolkit"};
    app.require_subcommand(1);

    CommandContext ctx{in, out, err};

    // params <m> <r>
    int params_m = 0, params_r = 0;
    auto* cmd_params = app.add_subcommand("params", "print n, k, d, rate of RM(m,r)");
    cmd_params->add_option("m", params_m, "variable count")->required();
    cmd_params->add_option("r", params_r, "degree bound")->required();

    // encode
    struct {
        int m = -1, r = -1;
        std::string in_path, out_path;
    } enc;
    auto* cmd_encode = app.add_subcommand("encode", "coefficients -> codeword");
    cmd_encode->add_option("--m", enc.m, "check: expected m");
    cmd_encode->add_option("--r", enc.r, "check: expected r");
    cmd_encode->add_option("--in", enc.in_path, "coefficient file (default stdin)");
    cmd_encode->add_option("--out", enc.out_path, "word file (default stdout)");

    // corrupt
    struct {
        std::int64_t t = -1;
        double p = -1.0;
        std::uint64_t seed = 0;
        bool erase = false;
        std::string in_path, out_path;
    } cor;
    auto* cmd_corrupt = app.add_subcommand("corrupt", "apply seeded random corruption");
    auto* cor_t = cmd_corrupt->add_option("--t", cor.t, "fixed error weight");
    auto* cor_p = cmd_corrupt->add_option("--p", cor.p, "per-bit corruption probability");
    cmd_corrupt->add_option("--seed", cor.seed, "random seed")->required();
    cmd_corrupt->add_flag("--erase", cor.erase, "erase instead of flip (emit '?')");
    cmd_corrupt->add_option("--in", cor.in_path, "word file (default stdin)");
    cmd_corrupt->add_option("--out", cor.out_path, "word file (default stdout)");
    cor_t->excludes(cor_p);

    // decode
    struct {
        int m = -1, r = -1, threads = 1;
        std::string in_path, out_path, coeffs_out;
    } dec;
    auto* cmd_decode = app.add_subcommand("decode", "correct errors in RM(m, m-2r-2)");
    cmd_decode->add_option("--m", dec.m, "check: expected m");
    cmd_decode->add_option("--r", dec.r, "locator degree")->required();
    cmd_decode->add_option("--threads", dec.threads, "worker threads");
    cmd_decode->add_option("--in", dec.in_path, "word file (default stdin)");
    cmd_decode->add_option("--out", dec.out_path, "word file (default stdout)");
    cmd_decode->add_option("--coeffs-out", dec.coeffs_out,
                           "also write the recovered coefficients");

    // erasure-decode
    struct {
        int m = -1, r = -1;
        std::string in_path, out_path;
    } era;
    auto* cmd_erasure =
        app.add_subcommand("erasure-decode", "fill '?' coordinates in RM(m,r)");
    cmd_erasure->add_option("--m", era.m, "check: expected m");
    cmd_erasure->add_option("--r", era.r, "code degree")->required();
    cmd_erasure->add_option("--in", era.in_path, "word file (default stdin)");
    cmd_erasure->add_option("--out", era.out_path, "word file (default stdout)");

    // experiment
    struct {
        int m = 0, r = 0, threads = 1;
        std::uint64_t trials = 0, seed = 0;
        std::int64_t t = 0;
        double p = 0.0, epsilon = 0.01;
        bool csv = false, json = false;
        std::string mode = "fixed";
    } exp;
    auto* cmd_exp = app.add_subcommand("experiment", "Monte-Carlo decode trials");
    cmd_exp->add_option("--m", exp.m, "variable count")->required();
    cmd_exp->add_option("--r", exp.r, "locator degree")->required();
    cmd_exp->add_option("--t", exp.t, "error weight (fixed mode)")->required();
    cmd_exp->add_option("--trials", exp.trials, "trial count")->required();
    cmd_exp->add_option("--seed", exp.seed, "master seed")->required();
    auto* exp_csv = cmd_exp->add_flag("--csv", exp.csv, "CSV output (default)");
    auto* exp_json = cmd_exp->add_flag("--json", exp.json, "JSON output");
    cmd_exp->add_option("--mode", exp.mode, "fixed | bsc | bec");
    cmd_exp->add_option("--p", exp.p, "probability for bsc/bec modes");
    cmd_exp->add_option("--epsilon", exp.epsilon, "failure budget for the reported bound");
    cmd_exp->add_option("--threads", exp.threads, "worker threads");
    exp_csv->excludes(exp_json);

    // general-decode
    struct {
        std::string parity_path, in_path, out_path;
    } gen;
    auto* cmd_general = app.add_subcommand(
        "general-decode", "decode the degree-three tensor code of a parity check");
    cmd_general->add_option("--parity", gen.parity_path, "parity-check matrix file")
        ->required();
    cmd_general->add_option("--in", gen.in_path,
                            "received word as a 1-row matrix file (default stdin)");
    cmd_general->add_option("--out", gen.out_path, "corrected word (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (cmd_params->parsed()) return run_params(params_m, params_r, ctx);

        if (cmd_encode->parsed()) {
            std::istringstream input(slurp(enc.in_path, in));
            const CoeffsFileData data = read_coeffs_file(input);
            if ((enc.m >= 0 && enc.m != data.m) || (enc.r >= 0 && enc.r != data.r))
                throw FormatError("encode: --m/--r do not match the input header");
            const RMCode code(data.m, data.r);
            std::ostringstream buf;
            write_word_file(buf, data.m, encode(code, data.coeffs));
            emit(enc.out_path, buf.str(), out);
            return kOk;
        }

        if (cmd_corrupt->parsed()) {
            if (cor_t->count() == 0 && cor_p->count() == 0)
                throw CLI::RequiredError("corrupt: one of --t/--p");
            std::istringstream input(slurp(cor.in_path, in));
            const WordFileData data = read_word_file(input);
            const BitVector word = require_full_word(data, "corrupt");
            const std::size_t n = word.size();

            ErrorPattern pattern{BitVector(n)};
            if (cor_t->count()) {
                if (cor.t < 0 || static_cast<std::size_t>(cor.t) > n)
                    throw FormatError("corrupt: --t out of range");
                pattern = random_error_pattern(n, static_cast<std::size_t>(cor.t), cor.seed);
            } else {
                if (cor.p < 0.0 || cor.p > 1.0)
                    throw FormatError("corrupt: --p must be in [0,1]");
                pattern = cor.erase ? bec(word, cor.p, cor.seed).second
                                    : bsc(word, cor.p, cor.seed).second;
            }

            std::ostringstream buf;
            if (cor.erase) {
                BitVector known = pattern.support;
                for (auto& w : known.words()) w = ~w;
                if (n & 63) {
                    auto words = known.words();
                    words[words.size() - 1] &= (std::uint64_t(1) << (n & 63)) - 1;
                }
                write_word_file(buf, data.m, ErasureWord{known, star(word, known)});
            } else {
                write_word_file(buf, data.m, apply(pattern, word));
            }
            emit(cor.out_path, buf.str(), out);
            return kOk;
        }

        if (cmd_decode->parsed()) {
            std::istringstream input(slurp(dec.in_path, in));
            const WordFileData data = read_word_file(input);
            const BitVector word = require_full_word(data, "decode");
            if (dec.m >= 0 && dec.m != data.m)
                throw FormatError("decode: --m does not match the input header");
            const DecoderParams params(data.m, dec.r);
            const std::optional<BitVector> corrected =
                SyndromeDecoder(params).decode(word, dec.threads);
            if (!corrected)
                throw DecodeFailure("decode failed: corrected word fails verification");
            std::ostringstream buf;
            write_word_file(buf, data.m, *corrected);
            emit(dec.out_path, buf.str(), out);
            if (!dec.coeffs_out.empty()) {
                const RMCode code = params.code();
                const auto coeffs = anf_coefficients(code, *corrected);
                std::ostringstream cbuf;
                write_coeffs_file(cbuf, code.m, code.r, *coeffs);
                emit(dec.coeffs_out, cbuf.str(), out);
            }
            return kOk;
        }

        if (cmd_erasure->parsed()) {
            std::istringstream input(slurp(era.in_path, in));
            const WordFileData data = read_word_file(input);
            if (era.m >= 0 && era.m != data.m)
                throw FormatError("erasure-decode: --m does not match the input header");
            const RMCode code(data.m, era.r);
            const ErasureDecodeResult res = erasure_decode(code, data.word);
            if (res.status == ErasureStatus::ambiguous)
                throw DecodeFailure("erasure decode failed: completion is not unique");
            if (res.status == ErasureStatus::inconsistent)
                throw DecodeFailure("erasure decode failed: no completion is a codeword");
            std::ostringstream buf;
            write_word_file(buf, data.m, res.word);
            emit(era.out_path, buf.str(), out);
            return kOk;
        }

        if (cmd_exp->parsed()) {
            ExperimentConfig config;
            config.m = exp.m;
            config.r = exp.r;
            config.trials = exp.trials;
            config.seed = exp.seed;
            config.epsilon = exp.epsilon;
            if (exp.mode == "fixed")
                config.mode = ChannelMode::fixed_weight;
            else if (exp.mode == "bsc")
                config.mode = ChannelMode::bsc;
            else if (exp.mode == "bec")
                config.mode = ChannelMode::bec;
            else
                throw FormatError("experiment: --mode must be fixed, bsc, or bec");
            if (exp.t < 0) throw FormatError("experiment: --t must be non-negative");
            config.t = static_cast<std::size_t>(exp.t);
            config.p = exp.p;
            if (config.mode != ChannelMode::fixed_weight && (exp.p < 0.0 || exp.p > 1.0))
                throw FormatError("experiment: --p must be in [0,1]");

            const TrialReport report = run_experiment(config, exp.threads);
            out << (exp.json ? format_json(config, report) : format_csv(config, report));
            return kOk;
        }

        if (cmd_general->parsed()) {
            std::ifstream parity_file(gen.parity_path);
            if (!parity_file)
                throw FormatError("cannot open parity file: " + gen.parity_path);
            const BitMatrix h = read_matrix_file(parity_file);
            const TensorEmbedding emb = build_tensor_triple(h);

            std::istringstream input(slurp(gen.in_path, in));
            const BitMatrix word_matrix = read_matrix_file(input);
            if (word_matrix.rows() != 1 ||
                word_matrix.cols() != emb.triple.code.length())
                throw FormatError("general-decode: expected a 1 x (cols+1) word matrix");
            const std::optional<BitVector> corrected =
                abstract_decode(word_matrix.row(0), emb.triple);
            if (!corrected)
                throw DecodeFailure("general decode failed: erasure completion not unique");
            std::ostringstream buf;
            write_matrix_file(buf, BitMatrix::from_rows({*corrected}));
            emit(gen.out_path, buf.str(), out);
            return kOk;
        }

        err << "no subcommand given\n";
        return kUsageError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const DecodeFailure& e) {
        err << e.what() << "\n";
        return kDecodeFailure;
    } catch (const FormatError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::length_error& e) {
        err << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace rmdec
