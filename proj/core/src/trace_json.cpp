#include <json.hpp>

#include "ltlf/semantics.hpp"

namespace ltlf {

Trace trace_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw TraceFormatError(std::string("trace file is not valid JSON: ") + err.what());
    }
    if (!doc.is_array()) {
        throw TraceFormatError("trace file must be a JSON array of states");
    }
    if (doc.empty()) {
        throw TraceFormatError("trace file must contain at least one state");
    }
    std::vector<Valuation> states;
    states.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& state = doc[i];
        if (!state.is_array()) {
            throw TraceFormatError("state " + std::to_string(i + 1) +
                                   " must be an array of variable names");
        }
        std::set<std::string> vars;
        for (const auto& entry : state) {
            if (!entry.is_string()) {
                throw TraceFormatError("state " + std::to_string(i + 1) +
                                       " contains a non-string entry");
            }
            vars.insert(entry.get<std::string>());
        }
        states.emplace_back(std::move(vars));
    }
    return Trace(std::move(states));
}

std::string trace_to_json(const Trace& trace) {
    nlohmann::json doc = nlohmann::json::array();
    for (const Valuation& state : trace.states()) {
        nlohmann::json vars = nlohmann::json::array();
        for (const std::string& v : state.true_vars()) vars.push_back(v);
        doc.push_back(std::move(vars));
    }
    return doc.dump();
}

}  // namespace ltlf
