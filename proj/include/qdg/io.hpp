#ifndef QDG_IO_HPP
#define QDG_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qdg/discord.hpp"
#include "qdg/entropy.hpp"
#include "qdg/graph.hpp"
#include "qdg/oracle.hpp"

namespace qdg::io {

// Canonical edge-list format:
//   first line "N m n", one line "u v" per edge (1-based; "u u" is a loop),
//   optional line "perm: p1 p2 ... pN" anywhere (identity when absent).
// Lines starting with '#' and blank lines are ignored.
LabeledGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const LabeledGraph& lg);

/// graph6 (short form, N <= 62); accepts an optional ">>graph6<<" header
/// prefix. Throws ParseError on malformed lines.
Graph parse_graph6(const std::string& line);

// Report serialization. JSON field names are part of the interface:
// { "m", "n", "s", "prop2", "prop3", "prop4", "prop5", "qd",
//   "zero_discord", "per_pair": [{condition, mu, nu_or_alpha_beta, i, j, value}] }
nlohmann::json to_json(const DiscordReport& report);
nlohmann::json to_json(const oracle::EquivalenceSummary& summary); // {checked, mismatches, mode, seed}
nlohmann::json to_json(const oracle::EntropyReport& report);

extern const char* const csv_header; // graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord
std::string csv_row(const std::string& graph_id, const DiscordReport& report);

std::string plain_report(const std::string& graph_id, const DiscordReport& report);

} // namespace qdg::io

#endif // QDG_IO_HPP
