#include <circham/formats.hpp>

#include <charconv>
#include <stdexcept>

namespace circham {

namespace {
    int parse_natural(std::string_view token, std::string_view what)
    {
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || token.front() == '-' || token.front() == '+' || ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(token) + "'");
        return value;
    }
}

std::vector<int> parse_connection_set(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("connection set is empty");
    std::vector<int> result;
    while (true) {
        const auto comma = text.find(',');
        result.push_back(parse_natural(text.substr(0, comma), "connection set element"));
        if (comma == std::string_view::npos)
            return result;
        text.remove_prefix(comma + 1);
    }
}

std::string join(std::span<const int> values, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += separator;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string to_dot(const Digraph & g)
{
    std::string out = "digraph {\n";
    for (auto [u, v] : g.arcs())
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string to_edges(const Digraph & g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
    for (auto [u, v] : g.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Digraph parse_edges(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (! text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos)
            throw std::invalid_argument("edges document must end with a newline");
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    auto split_pair = [](std::string_view line) {
        const auto space = line.find(' ');
        if (space == std::string_view::npos)
            throw std::invalid_argument("expected two fields in '" + std::string(line) + "'");
        return std::pair{parse_natural(line.substr(0, space), "edges field"), parse_natural(line.substr(space + 1), "edges field")};
    };
    if (lines.empty())
        throw std::invalid_argument("edges document is empty");
    auto [n, m] = split_pair(lines.front());
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("edges document declares " + std::to_string(m) + " arcs but lists " + std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i)
        arcs.push_back(split_pair(lines[i]));
    return Digraph(n, arcs);
}

}
