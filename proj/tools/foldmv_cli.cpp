#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "foldmv/characters.hpp"
#include "foldmv/records.hpp"

namespace {

using namespace foldmv;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    size_t at = 0;
    for (;;) {
        size_t comma = text.find(',', at);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(at));
            return parts;
        }
        parts.push_back(text.substr(at, comma - at));
        at = comma + 1;
    }
}

Vec parse_vec_arg(const std::string& text, const std::string& what) {
    Vec v;
    bool ok = !text.empty();
    if (ok)
        for (const std::string& piece : split_commas(text)) {
            try {
                size_t used = 0;
                v.push_back(std::stoll(piece, &used));
                ok = ok && !piece.empty() && used == piece.size();
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok) break;
        }
    require(ok, what + " must be a comma-separated list of integers");
    return v;
}

ReducedWord parse_word_arg(const std::string& text, const std::string& what) {
    ReducedWord word;
    for (Int x : parse_vec_arg(text, what)) {
        require(x >= 1, what + " letters are 1-based node indices");
        word.push_back(static_cast<int>(x) - 1);
    }
    return word;
}

std::string format_word(const ReducedWord& word) {
    Vec v;
    for (int i : word) v.push_back(i + 1);
    return format_vec(v);
}

LiftConvention parse_convention(const std::string& text) {
    if (text == "asc") return LiftConvention::Ascending;
    if (text == "desc") return LiftConvention::Descending;
    throw Error("--convention must be asc or desc");
}

struct Options {
    std::string type;
    std::string sigma;
    std::string word;
    std::string from;
    std::string to;
    std::string datum;
    std::string folded_word;
    std::string folded_datum;
    std::string coweight;
    std::string lambda;
    std::string convention = "asc";
    std::string out_path;
    long long cap = 1000000;
};

FoldingData folding_of(const RootDatum& rd, const Options& opt) {
    return build_folding(rd, parse_sigma(rd, opt.sigma));
}

int run_enumerate(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    ReducedWord word = parse_word_arg(opt.word, "--word");
    Vec nu = parse_vec_arg(opt.coweight, "--coweight");
    std::vector<LusztigDatum> data = enumerate_data(rd, word, nu, opt.cap);
    for (const LusztigDatum& d : data) std::cout << "datum: " << format_vec(d.values) << "\n";
    std::cout << "count: " << data.size() << "\n";
    return 0;
}

int run_fold(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    FoldingData f = folding_of(rd, opt);
    LiftConvention conv = parse_convention(opt.convention);
    ReducedWord folded_word = opt.folded_word.empty()
                                  ? canonical_folded_word(f)
                                  : parse_word_arg(opt.folded_word, "--folded-word");
    LusztigDatum d;
    d.word = lift_word(f, folded_word, conv);
    d.values = parse_vec_arg(opt.datum, "--datum");
    LusztigDatum folded = fold_datum(f, folded_word, d, conv);
    std::cout << "word: " << format_word(d.word) << "\n";
    std::cout << "folded word: " << format_word(folded_word) << "\n";
    std::cout << "folded datum: " << format_vec(folded.values) << "\n";
    return 0;
}

int run_unfold(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    FoldingData f = folding_of(rd, opt);
    LiftConvention conv = parse_convention(opt.convention);
    LusztigDatum folded;
    folded.word = opt.folded_word.empty() ? canonical_folded_word(f)
                                          : parse_word_arg(opt.folded_word, "--folded-word");
    folded.values = parse_vec_arg(opt.folded_datum, "--folded-datum");
    LusztigDatum d = unfold_datum(f, folded, conv);
    std::cout << "folded word: " << format_word(folded.word) << "\n";
    std::cout << "word: " << format_word(d.word) << "\n";
    std::cout << "datum: " << format_vec(d.values) << "\n";
    return 0;
}

int run_transport(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    if (opt.sigma.empty()) {
        LusztigDatum d;
        d.word = parse_word_arg(opt.from, "--from");
        d.values = parse_vec_arg(opt.datum, "--datum");
        LusztigDatum out = transport(rd, d, parse_word_arg(opt.to, "--to"));
        std::cout << "word: " << format_word(out.word) << "\n";
        std::cout << "datum: " << format_vec(out.values) << "\n";
        return 0;
    }
    FoldingData f = folding_of(rd, opt);
    LiftConvention conv = parse_convention(opt.convention);
    LusztigDatum folded;
    folded.word = parse_word_arg(opt.from, "--from");
    folded.values = parse_vec_arg(opt.datum, "--datum");
    LusztigDatum out = folded_transport(f, folded, parse_word_arg(opt.to, "--to"), conv);
    std::cout << "folded word: " << format_word(out.word) << "\n";
    std::cout << "folded datum: " << format_vec(out.values) << "\n";
    return 0;
}

int run_braid_path(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    std::vector<BraidMove> path = braid_path(rd, parse_word_arg(opt.from, "--from"),
                                             parse_word_arg(opt.to, "--to"), opt.cap);
    std::cout << "moves: " << path.size() << "\n";
    for (const BraidMove& mv : path)
        std::cout << "move: pos=" << mv.pos + 1 << " order=" << mv.order << " nodes="
                  << mv.node_a + 1 << "," << mv.node_b + 1 << "\n";
    return 0;
}

int run_verify_weights(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    WeightsReport report = verify_weights(rd, parse_vec_arg(opt.lambda, "--lambda"), opt.cap);
    for (const WeightRow& row : report.rows)
        std::cout << "mu=" << format_vec(row.mu) << " mv=" << row.mv
                  << " freudenthal=" << row.freudenthal
                  << (row.mv == row.freudenthal ? " ok" : " MISMATCH") << "\n";
    std::cout << "dimension: " << report.dimension << "\n";
    std::cout << "result: " << (report.equal ? "EQUAL" : "MISMATCH") << "\n";
    return report.equal ? 0 : 1;
}

int run_verify_twining(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    FoldingData f = folding_of(rd, opt);
    TwiningReport report = verify_twining(rd, f, parse_vec_arg(opt.lambda, "--lambda"), opt.cap);
    for (const TwiningRow& row : report.rows)
        std::cout << "mu=" << format_vec(row.mu) << " count=" << row.count
                  << " folded=" << row.folded_dim
                  << (row.count == row.folded_dim ? " ok" : " MISMATCH") << "\n";
    std::cout << "result: " << (report.equal ? "EQUAL" : "MISMATCH") << "\n";
    return report.equal ? 0 : 1;
}

int run_export(const Options& opt) {
    RootDatum rd = build_root_datum(opt.type);
    ReducedWord word = parse_word_arg(opt.word, "--word");
    require(opt.datum.empty() != opt.coweight.empty(),
            "exactly one of --datum and --coweight is required");
    std::vector<LusztigDatum> data;
    if (!opt.datum.empty()) {
        LusztigDatum d;
        d.word = word;
        d.values = parse_vec_arg(opt.datum, "--datum");
        validate_datum(rd, d);
        data.push_back(std::move(d));
    } else {
        data = enumerate_data(rd, word, parse_vec_arg(opt.coweight, "--coweight"), opt.cap);
    }
    FoldingData f;
    bool has_sigma = !opt.sigma.empty();
    if (has_sigma) f = folding_of(rd, opt);
    Vec lambda;
    bool has_lambda = !opt.lambda.empty();
    if (has_lambda) lambda = parse_vec_arg(opt.lambda, "--lambda");

    std::vector<PolytopeRecord> records;
    for (const LusztigDatum& d : data)
        records.push_back(make_record(rd, d, has_sigma ? &f : nullptr,
                                      has_lambda ? &lambda : nullptr));
    std::string text = dump_records(records);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        require(out.good(), "cannot open output file " + opt.out_path);
        out << text;
        require(out.good(), "failed writing output file " + opt.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MV polytopes, diagram foldings and twining characters, in exact arithmetic"};
    app.require_subcommand(1);
    Options opt;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", opt.type, "root datum label such as A2, A4, D4")->required();
    };
    auto add_sigma = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--sigma", opt.sigma,
                                  "diagram automorphism: flip, triality or cycles like (1 4)(2 3)");
        if (required) o->required();
    };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "enumeration size cap (default 1000000)");
    };
    auto add_convention = [&](CLI::App* cmd) {
        cmd->add_option("--convention", opt.convention, "per-orbit lift convention: asc or desc");
    };

    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "list all data on a reduced word with a given coweight");
    add_type(cmd_enumerate);
    cmd_enumerate->add_option("--word", opt.word, "reduced word, 1-based letters")->required();
    cmd_enumerate->add_option("--coweight", opt.coweight, "coweight in coroot coordinates")
        ->required();
    add_cap(cmd_enumerate);

    CLI::App* cmd_fold = app.add_subcommand(
        "fold", "fold a block-constant datum on the lifted folded word");
    add_type(cmd_fold);
    add_sigma(cmd_fold, true);
    cmd_fold->add_option("--datum", opt.datum, "values on the lifted word")->required();
    cmd_fold->add_option("--folded-word", opt.folded_word,
                         "folded reduced word (default: canonical longest word)");
    add_convention(cmd_fold);

    CLI::App* cmd_unfold =
        app.add_subcommand("unfold", "unfold a folded datum to the lifted word");
    add_type(cmd_unfold);
    add_sigma(cmd_unfold, true);
    cmd_unfold->add_option("--folded-datum", opt.folded_datum, "values on the folded word")
        ->required();
    cmd_unfold->add_option("--folded-word", opt.folded_word,
                           "folded reduced word (default: canonical longest word)");
    add_convention(cmd_unfold);

    CLI::App* cmd_transport = app.add_subcommand(
        "transport", "carry a datum to another reduced word (folded words with --sigma)");
    add_type(cmd_transport);
    add_sigma(cmd_transport, false);
    cmd_transport->add_option("--from", opt.from, "source reduced word")->required();
    cmd_transport->add_option("--to", opt.to, "target reduced word")->required();
    cmd_transport->add_option("--datum", opt.datum, "values on the source word")->required();
    add_convention(cmd_transport);

    CLI::App* cmd_braid = app.add_subcommand(
        "braid-path", "shortest braid-move chain between two reduced words");
    add_type(cmd_braid);
    cmd_braid->add_option("--from", opt.from, "source reduced word")->required();
    cmd_braid->add_option("--to", opt.to, "target reduced word")->required();
    add_cap(cmd_braid);

    CLI::App* cmd_weights = app.add_subcommand(
        "verify-weights", "compare MV counting against Freudenthal multiplicities");
    add_type(cmd_weights);
    cmd_weights->add_option("--lambda", opt.lambda, "dominant coweight in coroot coordinates")
        ->required();
    add_cap(cmd_weights);

    CLI::App* cmd_twining = app.add_subcommand(
        "verify-twining", "compare invariant-polytope counting against the folded character");
    add_type(cmd_twining);
    add_sigma(cmd_twining, true);
    cmd_twining->add_option("--lambda", opt.lambda, "sigma-invariant dominant coweight")
        ->required();
    add_cap(cmd_twining);

    CLI::App* cmd_export = app.add_subcommand("export", "write polytope records as JSON");
    add_type(cmd_export);
    add_sigma(cmd_export, false);
    cmd_export->add_option("--word", opt.word, "reduced word of the longest element")->required();
    cmd_export->add_option("--datum", opt.datum, "values for a single record");
    cmd_export->add_option("--coweight", opt.coweight, "export every datum with this coweight");
    cmd_export->add_option("--lambda", opt.lambda, "dominant coweight for the hull flag");
    cmd_export->add_option("-o,--out", opt.out_path, "output file (default: stdout)");
    add_cap(cmd_export);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_enumerate->parsed()) return run_enumerate(opt);
        if (cmd_fold->parsed()) return run_fold(opt);
        if (cmd_unfold->parsed()) return run_unfold(opt);
        if (cmd_transport->parsed()) return run_transport(opt);
        if (cmd_braid->parsed()) return run_braid_path(opt);
        if (cmd_weights->parsed()) return run_verify_weights(opt);
        if (cmd_twining->parsed()) return run_verify_twining(opt);
        if (cmd_export->parsed()) return run_export(opt);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (at least " << e.reached << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
