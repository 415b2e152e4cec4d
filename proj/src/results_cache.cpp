#include "expdom/results_cache.hpp"

#include "expdom/graph6.hpp"

#include <charconv>
#include <cstdlib>
#include <vector>

namespace expdom {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab - start));
        if (tab == std::string_view::npos)
            break;
        start = tab + 1;
    }
    return fields;
}

std::optional<int> parse_int(std::string_view s)
{
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size() || value < 0)
        return std::nullopt;
    return value;
}

} // namespace

std::string format_cache_line(const CacheRecord& r)
{
    return r.graph6 + '\t' + std::to_string(r.gamma) + '\t' + std::to_string(r.gamma_e) + '\t' +
           std::to_string(r.gamma_e_star);
}

std::optional<CacheRecord> parse_cache_line(std::string_view line)
{
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    const auto fields = split_tabs(line);
    if (fields.size() != 4)
        return std::nullopt;
    CacheRecord r;
    r.graph6 = std::string(fields[0]);
    const auto g = parse_int(fields[1]);
    const auto ge = parse_int(fields[2]);
    const auto ges = parse_int(fields[3]);
    if (!g || !ge || !ges || !(*ges <= *ge && *ge <= *g))
        return std::nullopt;
    r.gamma = *g;
    r.gamma_e = *ge;
    r.gamma_e_star = *ges;
    try {
        const Graph graph = decode_graph6(r.graph6);
        if (graph.order() > kMaxCanonicalOrder || !is_connected(graph) ||
            canonical_code(graph).to_graph6() != r.graph6)
            return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return r;
}

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<std::filesystem::path> ResultsCache::default_path()
{
    const char* value = std::getenv(kCacheEnvVar);
    if (value == nullptr || *value == '\0')
        return std::nullopt;
    return std::filesystem::path(value);
}

std::size_t ResultsCache::load(ParameterTable& table, std::ostream& warn)
{
    std::ifstream in(path_);
    if (!in)
        return 0;
    std::size_t loaded = 0;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (line.empty())
            continue;
        const auto record = parse_cache_line(line);
        if (!record) {
            warn << "warning: " << path_.string() << ":" << number << ": skipping corrupt cache line\n";
            continue;
        }
        table.preload(canonical_code(decode_graph6(record->graph6)),
                      {record->gamma, record->gamma_e, record->gamma_e_star});
        ++loaded;
    }
    return loaded;
}

void ResultsCache::attach(ParameterTable& table)
{
    table.set_sink([this](const CanonicalCode& code, const ParameterTriple& t) { append(code, t); });
}

void ResultsCache::append(const CanonicalCode& code, const ParameterTriple& t)
{
    const std::string line = format_cache_line({code.to_graph6(), t.gamma, t.gamma_e, t.gamma_e_star});
    std::lock_guard lock(mutex_);
    if (!out_.is_open()) {
        bool needs_newline = false;
        if (std::ifstream in(path_, std::ios::binary | std::ios::ate); in && in.tellg() > 0) {
            in.seekg(-1, std::ios::end);
            needs_newline = in.get() != '\n';
        }
        out_.open(path_, std::ios::app);
        if (!out_)
            throw std::runtime_error("cannot open cache file " + path_.string());
        if (needs_newline)
            out_ << '\n';
    }
    out_ << line << '\n';
    out_.flush();
}

} // namespace expdom
