#pragma once

#include "unilines/bundle.hpp"
#include "unilines/classifier.hpp"
#include "unilines/fano_table.hpp"
#include "unilines/veronese.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace unilines {

/// JSON views of the command results. Field order is fixed (ordered_json)
/// and rationals are emitted as exact "p/q" strings, never floats, so that
/// parse + re-serialize reproduces the bytes.
using Json = nlohmann::ordered_json;

Json classify_json(const PolarizedPair& p, const Verdict& v);
Json bundle_json(const BundleContext& ctx, long a, const BundleInvariants& inv, bool identity_ok,
                 const std::optional<VeroneseBoundsReport>& bounds);
Json fano_row_json(const FanoRow& row);
Json fano_verify_json(const TableCheck& check);
Json veronese_json(const GenericCount& gc, long a);
Json sweep_json(const std::vector<SweepRow>& rows);

} // namespace unilines
