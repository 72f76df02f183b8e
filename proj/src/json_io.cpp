#include "permfix/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace permfix {

std::string format_residual(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < p.length(); ++i) arr.push_back(p.part(i));
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    std::vector<unsigned> parts;
    for (const auto& v : j) parts.push_back(v.get<unsigned>());
    return Partition(parts);
}

Json matrix_to_json(const SparseExactMatrix& x) {
    Json entries = Json::array();
    for (const auto& [key, val] : x.entries())
        entries.push_back(Json::array({key.first, key.second, rat_str(val)}));
    return Json{{"dim", x.dim()}, {"entries", std::move(entries)}};
}

SparseExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix must carry dim and entries");
    SparseExactMatrix x(j.at("dim").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("matrix entry must be [row, col, value]");
        x.set(e[0].get<std::size_t>(), e[1].get<std::size_t>(),
              rat_parse(e[2].get<std::string>()));
    }
    return x;
}

Json chartable_to_json(const CharacterTable& table) {
    Json irreps = Json::array(), sizes = Json::array(), values = Json::array();
    for (const Partition& l : table.labels()) irreps.push_back(partition_to_json(l));
    for (std::size_t c = 0; c < table.size(); ++c) sizes.push_back(int_str(table.class_size(c)));
    for (std::size_t r = 0; r < table.size(); ++r) {
        Json row = Json::array();
        for (const Int& v : table.row(r)) row.push_back(int_str(v));
        values.push_back(std::move(row));
    }
    return Json{{"n", table.n()},
                {"irreps", irreps},
                {"classes", irreps},
                {"class_sizes", std::move(sizes)},
                {"values", std::move(values)}};
}

Json decomposition_to_json(const DecompositionReport& report) {
    Json entries = Json::array(), shape = Json::array();
    for (const DecompositionEntry& e : report.entries) {
        entries.push_back(Json{{"partition", partition_to_json(e.lambda)},
                               {"dimension", int_str(e.dim)},
                               {"multiplicity", int_str(e.multiplicity)}});
        if (e.multiplicity != 0) shape.push_back(int_str(e.multiplicity));
    }
    return Json{{"m", report.m},
                {"n", report.n},
                {"entries", std::move(entries)},
                {"fixed_point_shape", std::move(shape)},
                {"total_dimension", int_str(report.total_dim_check)},
                {"commutant_dimension", int_str(report.commutant_dim)}};
}

Json lemma_verdict_to_json(const LemmaVerdict& v) {
    Json counter = Json::array();
    for (const LemmaCounterexample& c : v.counterexamples)
        counter.push_back(Json{{"partition", partition_to_json(c.lambda)},
                               {"multiplicity", int_str(c.multiplicity)}});
    Json shadow;
    if (v.hypotheses_hold && v.all_divisible)
        shadow = Json{{"prime", v.p}, {"exponent", "infinity"}};
    return Json{{"m", v.m},
                {"n", v.n},
                {"p", v.p},
                {"k", v.k},
                {"hypotheses",
                 Json{{"pk_divides_m", v.pk_divides_m},
                      {"pk_divides_n_factorial", v.pk_divides_n_factorial},
                      {"vp_n_factorial", v.vp_n_factorial},
                      {"hold", v.hypotheses_hold}}},
                {"all_multiplicities_divisible", v.all_divisible},
                {"counterexamples", std::move(counter)},
                {"violated", v.violated()},
                {"uhf_shadow", std::move(shadow)}};
}

Json sweep_to_json(const SweepSummary& summary) {
    Json primes = Json::array();
    for (unsigned long p : summary.config.primes) primes.push_back(p);
    Json violations = Json::array(), sharpness = Json::array();
    for (const LemmaVerdict& v : summary.violations) violations.push_back(lemma_verdict_to_json(v));
    for (const LemmaVerdict& v : summary.sharpness_examples)
        sharpness.push_back(lemma_verdict_to_json(v));
    return Json{{"config",
                 Json{{"max_m", summary.config.max_m},
                      {"max_n", summary.config.max_n},
                      {"max_k", summary.config.max_k},
                      {"primes", std::move(primes)},
                      {"parallelism", summary.config.parallelism}}},
                {"tuples_checked", summary.tuples_checked},
                {"hypotheses_hold_count", summary.hypotheses_hold_count},
                {"violations", std::move(violations)},
                {"sharpness_examples", std::move(sharpness)},
                {"all_pass", summary.all_pass()}};
}

Json isotropy_to_json(const IsotropyReport& report) {
    Json coords = Json::array(), values = Json::array();
    for (const Rat& s : report.sorted_coordinates) coords.push_back(rat_str(s));
    for (const IsotropyValue& v : report.values)
        values.push_back(Json{{"value", rat_str(v.s)},
                              {"multiplicity", v.multiplicity},
                              {"classification", v.classification}});
    return Json{{"sorted_coordinates", std::move(coords)},
                {"values", std::move(values)},
                {"multiplicity_partition", partition_to_json(report.multiplicity_partition)},
                {"isotropy_group", report.isotropy_group},
                {"fiber_descriptor", report.fiber_descriptor}};
}

Json witness_to_json(const FrobeniusWitness& witness) {
    Json j{{"k", witness.k}, {"representable", witness.representable()}};
    j["a"] = witness.a ? Json(*witness.a) : Json();
    j["b"] = witness.b ? Json(*witness.b) : Json();
    return j;
}

Json residual_to_json(const Residual& r) {
    return Json{{"norm", format_residual(r.value())}, {"exact_zero", r.exact_zero()}};
}

Json verification_to_json(const VerificationReport& report, EmbedMode mode) {
    Json j{{"unital", residual_to_json(report.unital)},
           {"multiplicative", residual_to_json(report.multiplicative)},
           {"star", residual_to_json(report.star)},
           {"images_nonzero", report.images_nonzero},
           {"tolerance", report.tolerance},
           {"valid", report.valid(mode)}};
    j["equivariance"] = report.equivariance ? residual_to_json(*report.equivariance) : Json();
    j["rank"] = report.rank ? Json(*report.rank) : Json();
    j["expected_rank"] = report.expected_rank ? Json(*report.expected_rank) : Json();
    return j;
}

namespace {

std::string kind_str(CertKind kind) {
    switch (kind) {
        case CertKind::MatrixEmbedding: return "matrix-embedding";
        case CertKind::SumEmbedding: return "sum-embedding";
        case CertKind::BlockEmbedding: return "block-embedding";
    }
    throw std::logic_error("unknown certificate kind");
}

CertKind kind_parse(const std::string& s) {
    if (s == "matrix-embedding") return CertKind::MatrixEmbedding;
    if (s == "sum-embedding") return CertKind::SumEmbedding;
    if (s == "block-embedding") return CertKind::BlockEmbedding;
    throw std::invalid_argument("unknown certificate kind: " + s);
}

} // namespace

Json certificate_to_json(const EmbeddingCertificate& cert) {
    Json params;
    switch (cert.kind) {
        case CertKind::MatrixEmbedding:
            params = Json{{"m", cert.m}, {"n", cert.n}, {"p", cert.p}};
            break;
        case CertKind::SumEmbedding:
            params = Json{{"p", cert.p}, {"q", cert.q}, {"k", cert.k}, {"a", cert.a},
                          {"b", cert.b}};
            break;
        case CertKind::BlockEmbedding:
            params = Json{{"p", cert.p}, {"q", cert.q}, {"n", cert.n}};
            break;
    }
    Json j{{"kind", kind_str(cert.kind)},
           {"mode", cert.mode == EmbedMode::Exact ? "exact" : "numeric"},
           {"seed", cert.seed},
           {"tolerance", cert.tol},
           {"parameters", std::move(params)},
           {"verification", verification_to_json(cert.report, cert.mode)}};
    if (cert.kind == CertKind::BlockEmbedding) {
        Json images = Json::array();
        for (const BlockAlgebraElement& e : cert.block_images) {
            Json blocks = Json::array();
            for (const SparseExactMatrix& c : e.components) blocks.push_back(matrix_to_json(c));
            images.push_back(std::move(blocks));
        }
        j["block_images"] = std::move(images);
    } else {
        Json images = Json::array();
        for (const SparseExactMatrix& x : cert.images) images.push_back(matrix_to_json(x));
        j["images"] = std::move(images);
    }
    return j;
}

EmbeddingCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate must be an object");
    EmbeddingCertificate cert;
    cert.kind = kind_parse(j.at("kind").get<std::string>());
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "numeric")
        throw std::invalid_argument("unknown certificate mode: " + mode);
    cert.mode = mode == "exact" ? EmbedMode::Exact : EmbedMode::Numeric;
    cert.seed = j.value("seed", std::uint64_t{0});
    cert.tol = j.value("tolerance", 1e-9);

    const Json& params = j.at("parameters");
    cert.m = params.value("m", 0u);
    cert.n = params.value("n", 0u);
    cert.p = params.value("p", 0ul);
    cert.q = params.value("q", 0ul);
    cert.k = params.value("k", 0ul);
    cert.a = params.value("a", 0ul);
    cert.b = params.value("b", 0ul);

    if (cert.kind == CertKind::BlockEmbedding) {
        for (const auto& e : j.at("block_images")) {
            BlockAlgebraElement elem;
            for (const auto& c : e) elem.components.push_back(matrix_from_json(c));
            cert.block_images.push_back(std::move(elem));
        }
    } else {
        for (const auto& x : j.at("images")) cert.images.push_back(matrix_from_json(x));
        if (cert.images.empty()) throw std::invalid_argument("certificate carries no images");
    }
    return cert;
}

} // namespace permfix
