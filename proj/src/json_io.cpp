#include "gallai/json_io.hpp"

namespace gallai {

nlohmann::ordered_json to_json(const WitnessEmbedding& w)
{
    nlohmann::ordered_json j;
    j["pattern"] = std::string(kind_name(w.pattern.kind()));
    j["t_or_m"] = w.pattern.size();
    if (w.color) {
        j["color"] = *w.color;
    } else {
        j["color"] = "rainbow";
    }
    j["vertices"] = w.vertices;
    return j;
}

nlohmann::ordered_json to_json(const GallaiPartition& p)
{
    nlohmann::ordered_json j;
    j["parts"] = p.parts;
    auto quotient = nlohmann::ordered_json::array();
    for (std::size_t b = 1; b < p.parts.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            quotient.push_back({{"i", a}, {"j", b}, {"color", p.quotient_color(a, b)}});
        }
    }
    j["quotient"] = std::move(quotient);
    return j;
}

nlohmann::ordered_json to_json(const SearchStats& s, bool with_time)
{
    nlohmann::ordered_json j;
    j["nodes"] = s.nodes;
    j["prunes"] = s.prunes;
    if (with_time) {
        j["time"] = s.seconds;
    }
    return j;
}

} // namespace gallai
