#pragma once

#include "permfix/character.hpp"
#include "permfix/embeddings.hpp"
#include "permfix/frobenius.hpp"
#include "permfix/partition.hpp"
#include "permfix/schur_weyl.hpp"
#include "permfix/sparse_matrix.hpp"

#include "json.hpp"

#include <string>

namespace permfix {

using Json = nlohmann::json;

/// Residual magnitudes are printed with "%.12g" so reports are byte-stable
/// across platforms.
std::string format_residual(double value);

// Serialization conventions: arbitrary-precision integers are decimal
// strings, rationals are canonical "p/q" (or "p") strings, matrices list
// their nonzero entries as [row, col, value] sorted by (row, col). Keys are
// emitted in sorted order, so equal data serializes to equal bytes.

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json matrix_to_json(const SparseExactMatrix& x);
SparseExactMatrix matrix_from_json(const Json& j);

Json chartable_to_json(const CharacterTable& table);
Json decomposition_to_json(const DecompositionReport& report);
Json lemma_verdict_to_json(const LemmaVerdict& verdict);
Json sweep_to_json(const SweepSummary& summary);
Json isotropy_to_json(const IsotropyReport& report);
Json witness_to_json(const FrobeniusWitness& witness);

Json residual_to_json(const Residual& r);
Json verification_to_json(const VerificationReport& report, EmbedMode mode);
Json certificate_to_json(const EmbeddingCertificate& cert);

/// Rebuilds a certificate (parameters and images) from its serialized form.
/// The stored verification block is ignored; callers re-verify. Throws
/// std::invalid_argument on malformed input.
EmbeddingCertificate certificate_from_json(const Json& j);

} // namespace permfix
