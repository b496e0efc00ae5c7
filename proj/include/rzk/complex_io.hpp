#ifndef RZK_COMPLEX_IO_HPP
#define RZK_COMPLEX_IO_HPP

#include "rzk/complex.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace rzk {

// Complex files come in two flavours:
//   JSON:       {"m": 5, "facets": [[1,2],[2,3],...]}
//   plain text: first line m, then one whitespace-separated facet per line
// Labels are 1-based in both.

namespace detail {

inline VertexSet facet_from_labels(const std::vector<long long>& labels, std::size_t m)
{
    VertexSet f;
    for (long long v : labels) {
        if (v < 1 || static_cast<std::size_t>(v) > m) {
            throw InvalidInput("vertex label " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
        }
        if (v > static_cast<long long>(Limits::hard_max_vertices)) throw InvalidInput("vertex label too large");
        f.mask |= 1u << (v - 1);
    }
    return f;
}

} // namespace detail

inline SimplicialComplex parse_complex_json(const std::string& text, const Limits& limits = {})
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer()) {
        throw InvalidInput("complex JSON needs an integer field \"m\"");
    }
    const long long m = doc["m"].get<long long>();
    if (m < 0) throw InvalidInput("m must be non-negative");
    if (static_cast<std::size_t>(m) > limits.max_vertices || static_cast<std::size_t>(m) > Limits::hard_max_vertices) {
        throw SizeLimit("vertex count " + std::to_string(m) + " exceeds cap " + std::to_string(limits.max_vertices));
    }
    std::vector<VertexSet> facets;
    if (doc.contains("facets")) {
        if (!doc["facets"].is_array()) throw InvalidInput("\"facets\" must be an array");
        for (const auto& f : doc["facets"]) {
            if (!f.is_array()) throw InvalidInput("each facet must be an array of vertex labels");
            std::vector<long long> labels;
            for (const auto& v : f) {
                if (!v.is_number_integer()) throw InvalidInput("vertex labels must be integers");
                labels.push_back(v.get<long long>());
            }
            facets.push_back(detail::facet_from_labels(labels, static_cast<std::size_t>(m)));
        }
    }
    return SimplicialComplex::from_facets(static_cast<std::size_t>(m), facets, limits);
}

inline SimplicialComplex parse_complex_text(const std::string& text, const Limits& limits = {})
{
    std::istringstream in(text);
    std::string line;
    long long m = -1;
    std::vector<VertexSet> facets;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> labels;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                labels.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw InvalidInput("");
            } catch (const std::exception&) {
                throw InvalidInput("not an integer: '" + tok + "'");
            }
        }
        if (m < 0) {
            if (labels.empty()) continue;
            if (labels.size() != 1 || labels[0] < 0) throw InvalidInput("first line must hold the vertex count m");
            m = labels[0];
            if (static_cast<std::size_t>(m) > limits.max_vertices || static_cast<std::size_t>(m) > Limits::hard_max_vertices) {
                throw SizeLimit("vertex count " + std::to_string(m) + " exceeds cap " + std::to_string(limits.max_vertices));
            }
            continue;
        }
        if (!labels.empty()) facets.push_back(detail::facet_from_labels(labels, static_cast<std::size_t>(m)));
    }
    if (m < 0) throw InvalidInput("empty complex file");
    return SimplicialComplex::from_facets(static_cast<std::size_t>(m), facets, limits);
}

// Dispatches on the first non-blank character: '{' selects JSON.
inline SimplicialComplex parse_complex(const std::string& text, const Limits& limits = {})
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_complex_json(text, limits);
    return parse_complex_text(text, limits);
}

inline SimplicialComplex read_complex(const std::string& path, const Limits& limits = {})
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open complex file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str(), limits);
}

inline nlohmann::json complex_to_json(const SimplicialComplex& k)
{
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : k.facets()) facets.push_back(f.labels());
    return {{"m", k.vertex_count()}, {"facets", facets}};
}

} // namespace rzk

#endif // RZK_COMPLEX_IO_HPP
