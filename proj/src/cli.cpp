#include "permfix/cli.hpp"

#include "permfix/character.hpp"
#include "permfix/embeddings.hpp"
#include "permfix/frobenius.hpp"
#include "permfix/json_io.hpp"
#include "permfix/partition.hpp"
#include "permfix/schur_weyl.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permfix {

namespace {

struct OutputOptions {
    bool json = false;
    bool csv = false;
    std::string output_path;
};

void add_output_flags(CLI::App* sub, OutputOptions& opts, bool with_csv = false) {
    sub->add_flag("--json", opts.json, "print the full JSON document to stdout");
    if (with_csv) sub->add_flag("--csv", opts.csv, "print a CSV rendering to stdout");
    sub->add_option("--output", opts.output_path, "write the JSON document to this file");
}

// Every subcommand produces a JSON document plus a human-readable rendering;
// --output always receives the JSON regardless of what stdout shows.
void emit(const OutputOptions& opts, const Json& doc, const std::string& text,
          const std::string& csv, std::ostream& out) {
    if (!opts.output_path.empty()) {
        std::ofstream file(opts.output_path);
        if (!file) throw std::runtime_error("cannot open output file: " + opts.output_path);
        file << doc.dump(2) << '\n';
        if (!file) throw std::runtime_error("failed writing output file: " + opts.output_path);
    }
    if (opts.json)
        out << doc.dump(2) << '\n';
    else if (opts.csv && !csv.empty())
        out << csv;
    else
        out << text;
}

std::string residual_text(const Residual& r) {
    return r.exact_zero() ? "0 (exact)" : format_residual(r.value());
}

std::string verification_text(const VerificationReport& rep, EmbedMode mode) {
    std::ostringstream t;
    t << "residuals (Frobenius): unital " << residual_text(rep.unital) << ", multiplicative "
      << residual_text(rep.multiplicative) << ", star " << residual_text(rep.star);
    if (rep.equivariance) t << ", equivariance " << residual_text(*rep.equivariance);
    t << '\n';
    if (rep.rank && rep.expected_rank)
        t << "image rank: " << *rep.rank << " / " << *rep.expected_rank << '\n';
    t << "valid: " << (rep.valid(mode) ? "yes" : "no") << '\n';
    return t.str();
}

int run_chartable(unsigned n, const OutputOptions& opts, std::ostream& out) {
    CharacterTable table(n);
    Json doc = chartable_to_json(table);

    std::vector<std::string> labels;
    for (const Partition& l : table.labels()) labels.push_back(l.str());
    std::size_t rows = table.size();
    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(rows));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < rows; ++c) cells[r][c] = int_str(table.value(r, c));

    std::size_t label_w = 5; // "class"
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> col_w(rows);
    for (std::size_t c = 0; c < rows; ++c) {
        col_w[c] = std::max(labels[c].size(), int_str(table.class_size(c)).size());
        for (std::size_t r = 0; r < rows; ++r) col_w[c] = std::max(col_w[c], cells[r][c].size());
    }

    std::ostringstream t;
    t << "character table of the symmetric group on " << n
      << " letters (rows: irreducibles, columns: classes)\n";
    t << std::left << std::setw(static_cast<int>(label_w)) << "class";
    for (std::size_t c = 0; c < rows; ++c)
        t << "  " << std::right << std::setw(static_cast<int>(col_w[c])) << labels[c];
    t << '\n' << std::left << std::setw(static_cast<int>(label_w)) << "size";
    for (std::size_t c = 0; c < rows; ++c)
        t << "  " << std::right << std::setw(static_cast<int>(col_w[c]))
          << int_str(table.class_size(c));
    t << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        t << std::left << std::setw(static_cast<int>(label_w)) << labels[r];
        for (std::size_t c = 0; c < rows; ++c)
            t << "  " << std::right << std::setw(static_cast<int>(col_w[c])) << cells[r][c];
        t << '\n';
    }

    std::ostringstream csv;
    csv << "irrep";
    for (const auto& l : labels) csv << ",\"" << l << "\"";
    csv << "\nsize";
    for (std::size_t c = 0; c < rows; ++c) csv << ',' << int_str(table.class_size(c));
    csv << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        csv << '"' << labels[r] << '"';
        for (std::size_t c = 0; c < rows; ++c) csv << ',' << cells[r][c];
        csv << '\n';
    }

    emit(opts, doc, t.str(), csv.str(), out);
    return 0;
}

int run_decompose(unsigned m, unsigned n, const OutputOptions& opts, std::ostream& out) {
    DecompositionReport report = multiplicities(m, n);
    Json doc = decomposition_to_json(report);

    std::size_t label_w = 9, dim_w = 9, mult_w = 12;
    for (const auto& e : report.entries) {
        label_w = std::max(label_w, e.lambda.str().size());
        dim_w = std::max(dim_w, int_str(e.dim).size());
        mult_w = std::max(mult_w, int_str(e.multiplicity).size());
    }
    std::ostringstream t;
    t << "fixed-point algebra of the permutation action: m=" << m << " n=" << n << '\n';
    t << std::left << std::setw(static_cast<int>(label_w)) << "partition" << "  " << std::right
      << std::setw(static_cast<int>(dim_w)) << "dimension" << "  "
      << std::setw(static_cast<int>(mult_w)) << "multiplicity" << '\n';
    for (const auto& e : report.entries)
        t << std::left << std::setw(static_cast<int>(label_w)) << e.lambda.str() << "  "
          << std::right << std::setw(static_cast<int>(dim_w)) << int_str(e.dim) << "  "
          << std::setw(static_cast<int>(mult_w)) << int_str(e.multiplicity) << '\n';
    t << "total dimension: " << int_str(report.total_dim_check) << " = " << m << "^" << n << '\n';
    t << "fixed-point algebra blocks:";
    for (const auto& e : report.entries)
        if (e.multiplicity != 0) t << " M_" << int_str(e.multiplicity);
    t << "\ncommutant dimension: " << int_str(report.commutant_dim) << '\n';

    std::ostringstream csv;
    csv << "partition,dimension,multiplicity\n";
    for (const auto& e : report.entries)
        csv << '"' << e.lambda.str() << "\"," << int_str(e.dim) << ','
            << int_str(e.multiplicity) << '\n';

    emit(opts, doc, t.str(), csv.str(), out);
    return 0;
}

std::string verdict_text(const LemmaVerdict& v) {
    std::ostringstream t;
    t << "divisibility check: m=" << v.m << " n=" << v.n << " p=" << v.p << " k=" << v.k << '\n';
    t << "hypotheses: p^k | m: " << (v.pk_divides_m ? "yes" : "no") << "; p^k | n!: "
      << (v.pk_divides_n_factorial ? "yes" : "no") << " (v_p(n!) = " << v.vp_n_factorial
      << "); hold: " << (v.hypotheses_hold ? "yes" : "no") << '\n';
    t << "all multiplicities divisible by p: " << (v.all_divisible ? "yes" : "no") << '\n';
    if (!v.counterexamples.empty()) {
        t << "indivisible multiplicities:";
        for (const auto& c : v.counterexamples)
            t << ' ' << c.lambda.str() << " -> " << int_str(c.multiplicity);
        t << '\n';
    }
    if (v.violated())
        t << "verdict: VIOLATION (hypotheses hold but a multiplicity escapes p)\n";
    else if (v.hypotheses_hold)
        t << "verdict: pass (every multiplicity divisible by p)\n";
    else
        t << "verdict: hypotheses do not hold; divisibility not asserted\n";
    return t.str();
}

int run_check_lemma(unsigned m, unsigned n, unsigned long p, unsigned k,
                    const OutputOptions& opts, std::ostream& out) {
    LemmaVerdict v = check_lemma(m, n, p, k);
    emit(opts, lemma_verdict_to_json(v), verdict_text(v), "", out);
    return v.violated() ? 2 : 0;
}

int run_sweep(const SweepConfig& config, const OutputOptions& opts, std::ostream& out) {
    SweepSummary summary = lemma_sweep(config);
    Json doc = sweep_to_json(summary);

    std::ostringstream t;
    t << "divisibility sweep: m <= " << config.max_m << ", n <= " << config.max_n
      << ", k <= " << config.max_k << ", primes";
    for (unsigned long p : config.primes) t << ' ' << p;
    t << '\n';
    t << "tuples checked: " << summary.tuples_checked << " (hypotheses hold in "
      << summary.hypotheses_hold_count << ")\n";
    t << "violations: " << summary.violations.size() << '\n';
    for (const auto& v : summary.violations)
        t << "  m=" << v.m << " n=" << v.n << " p=" << v.p << " k=" << v.k << '\n';
    t << "sharpness examples (p^k divides m and n!, divisibility fails): "
      << summary.sharpness_examples.size() << '\n';
    for (const auto& v : summary.sharpness_examples) {
        t << "  m=" << v.m << " n=" << v.n << " p=" << v.p << " k=" << v.k << ":";
        for (const auto& c : v.counterexamples)
            t << ' ' << c.lambda.str() << " -> " << int_str(c.multiplicity);
        t << '\n';
    }
    t << (summary.all_pass() ? "result: pass\n" : "result: FAIL\n");

    std::ostringstream csv;
    csv << "m,n,p,k,hypotheses_hold,all_divisible,violated\n";
    auto csv_row = [&](const LemmaVerdict& v) {
        csv << v.m << ',' << v.n << ',' << v.p << ',' << v.k << ','
            << (v.hypotheses_hold ? 1 : 0) << ',' << (v.all_divisible ? 1 : 0) << ','
            << (v.violated() ? 1 : 0) << '\n';
    };
    for (const auto& v : summary.violations) csv_row(v);
    for (const auto& v : summary.sharpness_examples) csv_row(v);

    emit(opts, doc, t.str(), csv.str(), out);
    return summary.all_pass() ? 0 : 2;
}

int run_embed_mp(unsigned m, unsigned n, unsigned long p, const EmbedOptions& eopts,
                 const OutputOptions& opts, std::ostream& out) {
    EmbeddingCertificate cert = construct_Mp_embedding(m, n, p, eopts);
    Json doc = certificate_to_json(cert);
    std::ostringstream t;
    t << "matrix-unit embedding of M_" << p << " into the fixed-point algebra: m=" << m
      << " n=" << n << '\n';
    t << "mode: " << (cert.mode == EmbedMode::Exact ? "exact" : "numeric")
      << ", seed: " << cert.seed << ", tolerance: " << format_residual(cert.tol) << '\n';
    t << verification_text(cert.report, cert.mode);
    emit(opts, doc, t.str(), "", out);
    return cert.report.valid(cert.mode) ? 0 : 2;
}

int run_embed_sum(unsigned long p, unsigned long q, unsigned long k, const OutputOptions& opts,
                  std::ostream& out) {
    FrobeniusWitness witness = represent_as_ap_bq(p, q, k);
    if (!witness.representable()) {
        Json doc{{"witness", witness_to_json(witness)},
                 {"p", p},
                 {"q", q},
                 {"threshold", positive_representability_threshold(p, q)}};
        std::ostringstream t;
        t << k << " is not representable as a*" << p << " + b*" << q
          << " with positive integers a, b\n";
        t << "every k >= " << positive_representability_threshold(p, q)
          << " is representable\n";
        emit(opts, doc, t.str(), "", out);
        return 2;
    }
    EmbeddingCertificate cert = embed_sum_into_matrix(p, q, k, witness);
    Json doc = certificate_to_json(cert);
    std::ostringstream t;
    t << "block-diagonal embedding of M_" << p << " (+) M_" << q << " into M_" << k << ": " << k
      << " = " << *witness.a << "*" << p << " + " << *witness.b << "*" << q << '\n';
    t << verification_text(cert.report, cert.mode);
    emit(opts, doc, t.str(), "", out);
    return cert.report.valid(cert.mode) ? 0 : 2;
}

int run_embed_block(unsigned long p, unsigned long q, unsigned n, const OutputOptions& opts,
                    std::ostream& out) {
    EmbeddingCertificate cert = construct_block_embedding(p, q, n);
    Json doc = certificate_to_json(cert);
    std::ostringstream t;
    t << "embedding of M_" << p << " (+) M_" << q
      << " into the fixed blocks of the two-letter word algebra: n=" << n << '\n';
    t << verification_text(cert.report, cert.mode);
    emit(opts, doc, t.str(), "", out);
    return cert.report.valid(cert.mode) ? 0 : 2;
}

int run_isotropy(const std::string& coords, const OutputOptions& opts, std::ostream& out) {
    std::vector<Rat> values;
    std::stringstream ss(coords);
    std::string piece;
    while (std::getline(ss, piece, ',')) values.push_back(rat_parse(piece));
    IsotropyReport report = isotropy_type(std::move(values));
    Json doc = isotropy_to_json(report);
    std::ostringstream t;
    t << "coordinates (sorted):";
    for (const Rat& s : report.sorted_coordinates) t << ' ' << rat_str(s);
    t << '\n';
    t << "isotropy group: " << report.isotropy_group << '\n';
    t << "multiplicity partition: " << report.multiplicity_partition.str() << '\n';
    t << "fiber: " << report.fiber_descriptor << '\n';
    emit(opts, doc, t.str(), "", out);
    return 0;
}

int run_verify(const std::string& path, double tol, bool tol_given, const OutputOptions& opts,
               std::ostream& out) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open certificate file: " + path);
    Json j;
    try {
        file >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    EmbeddingCertificate cert = certificate_from_json(j);
    if (tol_given) cert.tol = tol;
    cert.report = verify_certificate(cert);
    Json doc = verification_to_json(cert.report, cert.mode);
    std::ostringstream t;
    t << "re-verification of " << j.at("kind").get<std::string>() << " ("
      << (cert.mode == EmbedMode::Exact ? "exact" : "numeric") << " mode)\n";
    t << verification_text(cert.report, cert.mode);
    emit(opts, doc, t.str(), "", out);
    return cert.report.valid(cert.mode) ? 0 : 2;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decomposition and embedding toolkit for the fixed-point algebra of "
                 "symmetric-group tensor permutation actions"};
    app.require_subcommand(1);
    int rc = 0;

    struct {
        unsigned n = 0;
        OutputOptions out;
    } chartable;
    auto* sub_chartable =
        app.add_subcommand("chartable", "integer character table of the symmetric group");
    sub_chartable->add_option("n", chartable.n, "number of letters")->required();
    add_output_flags(sub_chartable, chartable.out, true);
    sub_chartable->callback([&] { rc = run_chartable(chartable.n, chartable.out, out); });

    struct {
        unsigned m = 0, n = 0;
        OutputOptions out;
    } decompose;
    auto* sub_decompose = app.add_subcommand(
        "decompose", "multiplicities and block sizes of the fixed-point algebra");
    sub_decompose->add_option("m", decompose.m, "local dimension")->required();
    sub_decompose->add_option("n", decompose.n, "tensor factors")->required();
    add_output_flags(sub_decompose, decompose.out, true);
    sub_decompose->callback(
        [&] { rc = run_decompose(decompose.m, decompose.n, decompose.out, out); });

    struct {
        unsigned m = 0, n = 0, k = 0;
        unsigned long p = 0;
        OutputOptions out;
    } lemma;
    auto* sub_lemma = app.add_subcommand(
        "check-lemma", "verify that p divides every multiplicity when p^k | m and p^k does not "
                       "divide n!");
    sub_lemma->add_option("m", lemma.m, "local dimension")->required();
    sub_lemma->add_option("n", lemma.n, "tensor factors")->required();
    sub_lemma->add_option("p", lemma.p, "prime")->required();
    sub_lemma->add_option("k", lemma.k, "prime power exponent")->required();
    add_output_flags(sub_lemma, lemma.out);
    sub_lemma->callback(
        [&] { rc = run_check_lemma(lemma.m, lemma.n, lemma.p, lemma.k, lemma.out, out); });

    struct {
        SweepConfig config;
        OutputOptions out;
    } sweep;
    auto* sub_sweep =
        app.add_subcommand("sweep", "exhaustive divisibility check over a parameter box");
    sub_sweep->add_option("--max-m", sweep.config.max_m, "largest local dimension");
    sub_sweep->add_option("--max-n", sweep.config.max_n, "largest tensor power");
    sub_sweep->add_option("--max-k", sweep.config.max_k, "largest prime power exponent");
    sub_sweep->add_option("--primes", sweep.config.primes, "primes to test");
    sub_sweep->add_option("--parallelism", sweep.config.parallelism, "worker threads");
    add_output_flags(sub_sweep, sweep.out, true);
    sub_sweep->callback([&] { rc = run_sweep(sweep.config, sweep.out, out); });

    struct {
        unsigned m = 0, n = 0;
        unsigned long p = 0;
        std::string mode = "numeric";
        EmbedOptions eopts;
        OutputOptions out;
    } embed_mp;
    auto* sub_embed_mp = app.add_subcommand(
        "embed-mp", "construct a unital equivariant embedding of M_p into the fixed-point "
                    "algebra, with a machine-checkable certificate");
    sub_embed_mp->add_option("m", embed_mp.m, "local dimension")->required();
    sub_embed_mp->add_option("n", embed_mp.n, "tensor factors")->required();
    sub_embed_mp->add_option("p", embed_mp.p, "prime")->required();
    sub_embed_mp->add_option("--mode", embed_mp.mode, "construction mode")
        ->check(CLI::IsMember({"exact", "numeric"}));
    sub_embed_mp->add_option("--seed", embed_mp.eopts.seed, "seed for the numeric pipeline");
    sub_embed_mp->add_option("--tol", embed_mp.eopts.tol, "numeric verification tolerance");
    add_output_flags(sub_embed_mp, embed_mp.out);
    sub_embed_mp->callback([&] {
        embed_mp.eopts.mode =
            embed_mp.mode == "exact" ? EmbedMode::Exact : EmbedMode::Numeric;
        rc = run_embed_mp(embed_mp.m, embed_mp.n, embed_mp.p, embed_mp.eopts, embed_mp.out,
                          out);
    });

    struct {
        unsigned long p = 0, q = 0, k = 0;
        OutputOptions out;
    } embed_sum;
    auto* sub_embed_sum = app.add_subcommand(
        "embed-sum", "unital block-diagonal embedding of M_p (+) M_q into M_k from a positive "
                     "representation k = ap + bq");
    sub_embed_sum->add_option("p", embed_sum.p, "first block size")->required();
    sub_embed_sum->add_option("q", embed_sum.q, "second block size")->required();
    sub_embed_sum->add_option("k", embed_sum.k, "target matrix size")->required();
    add_output_flags(sub_embed_sum, embed_sum.out);
    sub_embed_sum->callback(
        [&] { rc = run_embed_sum(embed_sum.p, embed_sum.q, embed_sum.k, embed_sum.out, out); });

    struct {
        unsigned long p = 0, q = 0;
        unsigned n = 0;
        OutputOptions out;
    } embed_block;
    auto* sub_embed_block = app.add_subcommand(
        "embed-block", "embed M_p (+) M_q into the invariant block algebra of words over two "
                       "letters of dimensions p and q");
    sub_embed_block->add_option("p", embed_block.p, "first prime")->required();
    sub_embed_block->add_option("q", embed_block.q, "second prime")->required();
    sub_embed_block->add_option("n", embed_block.n, "word length")->required();
    add_output_flags(sub_embed_block, embed_block.out);
    sub_embed_block->callback([&] {
        rc = run_embed_block(embed_block.p, embed_block.q, embed_block.n, embed_block.out, out);
    });

    struct {
        std::string coords;
        OutputOptions out;
    } isotropy;
    auto* sub_isotropy = app.add_subcommand(
        "isotropy", "stabilizer and fiber type of a point of the ordered simplex under "
                    "coordinate permutation");
    sub_isotropy
        ->add_option("coordinates", isotropy.coords,
                     "comma-separated rationals in [0,1], e.g. 0,1/2,1")
        ->required();
    add_output_flags(sub_isotropy, isotropy.out);
    sub_isotropy->callback([&] { rc = run_isotropy(isotropy.coords, isotropy.out, out); });

    struct {
        std::string path;
        double tol = 1e-9;
        OutputOptions out;
    } verify;
    auto* sub_verify = app.add_subcommand(
        "verify", "re-verify a stored embedding certificate in exact arithmetic");
    sub_verify->add_option("certificate", verify.path, "path to a certificate JSON file")
        ->required();
    auto* tol_opt = sub_verify->add_option("--tol", verify.tol, "override stored tolerance");
    add_output_flags(sub_verify, verify.out);
    sub_verify->callback([&] {
        rc = run_verify(verify.path, verify.tol, tol_opt->count() > 0, verify.out, out);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

} // namespace permfix
