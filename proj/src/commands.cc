// Copyright 2026 The qlistdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qld/commands.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "qld/bounds.h"
#include "qld/errors.h"
#include "qld/listdec.h"
#include "qld/oracle.h"
#include "qld/rng.h"
#include "qld/state.h"
#include "qld/stategen.h"

namespace qld {

namespace {

// RNG streams per trial.
constexpr uint64_t kNoiseStream = 0;
constexpr uint64_t kMeasureStream = 1;

constexpr uint64_t kMaxPresenceRows = 1 << 16;

template <typename T>
T require(const std::optional<T> &v, const char *key, const char *command) {
    if (!v) {
        throw ConfigError(std::string(command) + " requires --" + key);
    }
    return *v;
}

void resolve_seed(ExperimentConfig &cfg, std::ostream &err) {
    if (!cfg.seed) {
        std::random_device dev;
        cfg.seed = (static_cast<uint64_t>(dev()) << 32) ^ dev();
        err << "seed = " << *cfg.seed << "\n";
    }
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    return in;
}

// Shared per-run inputs for building the trial oracle.
struct OracleSource {
    CodePtr code;
    std::string noise;
    uint64_t x = 0;
    double rate = 0;
    std::optional<AmplitudeTable> table;
};

OracleSource oracle_source(const ExperimentConfig &cfg, CodePtr code) {
    OracleSource s;
    s.code = std::move(code);
    s.noise = cfg.noise.value_or("perfect");
    s.x = cfg.x.value_or(0);
    s.rate = cfg.rate.value_or(0.0);
    if (s.noise != "adversarial-table" && s.noise != "uniform" && s.x >= s.code->message_count()) {
        throw ConfigError("x = " + std::to_string(s.x) + " out of range; the code has " +
                          std::to_string(s.code->message_count()) + " messages");
    }
    if (s.noise == "adversarial-table") {
        std::ifstream in = open_input(require(cfg.oracle_table, "oracle-table", "noise=adversarial-table"));
        s.table = read_amplitude_table(in);
        if (s.table->q != s.code->q() || s.table->block_length != s.code->block_length()) {
            throw ConfigError("oracle table geometry (q, M) does not match the code");
        }
    }
    return s;
}

CorruptedCodewordOracle build_oracle(const OracleSource &s, Rng &noise_rng) {
    const CodeInstance &code = *s.code;
    if (s.noise == "perfect") {
        return CorruptedCodewordOracle::from_perfect(code, s.x);
    }
    if (s.noise == "symmetric") {
        return CorruptedCodewordOracle::from_symmetric_noise(code, s.x, s.rate, noise_rng);
    }
    if (s.noise == "adversarial-table") {
        return CorruptedCodewordOracle::from_amplitude_table(*s.table);
    }
    if (s.noise == "predictor") {
        UnitaryMap u = noisy_predictor(code, s.x, s.rate, noise_rng);
        return CorruptedCodewordOracle::from_predictor(u, code.q(), code.block_length(), 0);
    }
    return CorruptedCodewordOracle::from_amplitude_table(uniform_amplitude_table(code.q(), code.block_length()));
}

struct TrialResult {
    std::string rows;
    std::vector<uint64_t> above;
    std::vector<uint64_t> candidates;
    uint64_t queries = 0;
};

// Runs fn(trial) for every trial on a small pool. Results land by index.
template <typename Fn>
std::vector<TrialResult> run_trials(uint64_t trials, uint64_t threads, Fn fn) {
    std::vector<TrialResult> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (uint64_t i = next++; i < trials; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    uint64_t n = std::max<uint64_t>(1, std::min(threads, trials));
    std::vector<std::thread> pool;
    for (uint64_t t = 1; t < n; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread &t : pool) {
        t.join();
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

}  // namespace

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names = {"bounds",       "listdecode",  "decode-state", "presence",
                                                   "gen-legendre", "invert-demo", "johnson-check"};
    return names;
}

CodePtr code_from_config(const ExperimentConfig &cfg) {
    std::string code = require(cfg.code, "code", "this command");
    if (code == "had") {
        return std::make_shared<const CodeInstance>(
            CodeInstance::hadamard(require(cfg.q, "q", "code=had"), require(cfg.n, "n", "code=had")));
    }
    if (code == "peq") {
        return std::make_shared<const CodeInstance>(CodeInstance::pairwise_equality(require(cfg.n, "n", "code=peq")));
    }
    if (code == "sls") {
        return std::make_shared<const CodeInstance>(CodeInstance::shifted_legendre(require(cfg.p, "p", "code=sls")));
    }
    if (code == "sls-negated") {
        return std::make_shared<const CodeInstance>(
            CodeInstance::negated_legendre(require(cfg.p, "p", "code=sls-negated")));
    }
    std::ifstream in = open_input(require(cfg.table, "table", "code=table"));
    return std::make_shared<const CodeInstance>(CodeInstance::read_table(in, require(cfg.q, "q", "code=table")));
}

std::vector<uint64_t> read_function_table(const std::string &path) {
    std::ifstream in = open_input(path);
    std::vector<uint64_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string w;
        while (words >> w) {
            try {
                size_t used = 0;
                unsigned long long v = std::stoull(w, &used);
                if (used != w.size() || w[0] == '-') {
                    throw std::invalid_argument(w);
                }
                out.push_back(v);
            } catch (const std::logic_error &) {
                throw ConfigError("function table '" + path + "': bad entry '" + w + "'");
            }
        }
    }
    return out;
}

int cmd_bounds(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    uint64_t m;
    uint64_t q;
    uint64_t d;
    if (cfg.code) {
        CodePtr code = code_from_config(cfg);
        m = cfg.m.value_or(code->block_length());
        q = code->q();
        d = cfg.d ? *cfg.d : code_distance(*code);
        if (!cfg.nu) {
            cfg.nu = default_decoder(code).nu();
        }
    } else {
        m = require(cfg.m, "M", "bounds");
        q = require(cfg.q, "q", "bounds");
        d = require(cfg.d, "d", "bounds");
    }
    BoundsReport r = BoundsReport::compute(m, q, d, require(cfg.eps, "eps", "bounds"), cfg.delta.value_or(0.5),
                                           cfg.nu.value_or(0.0));
    out << r.to_kv();
    if (!r.usable) {
        err << "error: sigma = " << format_double(r.sigma) << " <= 0; the list decoder is inapplicable\n";
        return kExitInapplicable;
    }
    return kExitOk;
}

int cmd_listdecode(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    resolve_seed(cfg, err);
    CodePtr code = code_from_config(cfg);
    CodewordStateDecoder decoder = default_decoder(code);
    OracleSource source = oracle_source(cfg, code);
    double eps = require(cfg.eps, "eps", "listdecode");
    double delta = cfg.delta.value_or(0.5);
    uint64_t d = cfg.d.value_or(0);
    uint64_t trials = cfg.trials.value_or(1);
    uint64_t seed = *cfg.seed;

    // Fails fast on the bounds before any worker starts.
    BoundsReport params =
        BoundsReport::compute(code->block_length(), code->q(), d ? d : code_distance(*code), eps, delta, decoder.nu());
    if (!params.usable) {
        throw DecoderInapplicable("sigma = " + format_double(params.sigma) + " is not positive", params.sigma);
    }

    std::vector<TrialResult> results = run_trials(trials, cfg.threads.value_or(1), [&](uint64_t trial) {
        Rng noise_rng = make_rng(seed, trial, kNoiseStream);
        Rng measure_rng = make_rng(seed, trial, kMeasureStream);
        CorruptedCodewordOracle oracle = build_oracle(source, noise_rng);
        ListDecodeResult r = list_decode(oracle, decoder, eps, delta, d, measure_rng, seed);
        TrialResult t;
        std::ostringstream rows;
        write_outcome_rows(rows, trial, r);
        t.rows = rows.str();
        t.above = above_threshold(oracle, *code, eps);
        t.candidates = r.candidate_list;
        t.queries = r.query_count;
        return t;
    });

    std::ofstream file;
    std::ostream *csv = &out;
    if (cfg.out) {
        file.open(*cfg.out);
        if (!file) {
            throw ConfigError("cannot write '" + *cfg.out + "'");
        }
        csv = &file;
    }
    *csv << cfg.provenance_header();
    std::istringstream kv(params.to_kv());
    for (std::string l; std::getline(kv, l);) {
        *csv << "# " << l << "\n";
    }
    write_outcome_header(*csv);
    for (const TrialResult &t : results) {
        *csv << t.rows;
    }

    std::map<uint64_t, std::pair<uint64_t, uint64_t>> hits;  // message -> (trials above, trials listed)
    double list_sum = 0;
    uint64_t max_queries = 0;
    double query_sum = 0;
    for (const TrialResult &t : results) {
        for (uint64_t x : t.above) {
            auto &h = hits[x];
            h.first++;
            h.second += std::binary_search(t.candidates.begin(), t.candidates.end(), x);
        }
        list_sum += static_cast<double>(t.candidates.size());
        max_queries = std::max(max_queries, t.queries);
        query_sum += static_cast<double>(t.queries);
    }
    std::ostream &summary = cfg.out ? out : err;
    summary << "trials = " << trials << "\n";
    summary << "repetitions = " << params.repetitions << "\n";
    summary << "mean_list_size = " << format_double(list_sum / static_cast<double>(trials)) << "\n";
    summary << "mean_queries = " << format_double(query_sum / static_cast<double>(trials)) << "\n";
    summary << "max_queries = " << max_queries << "\n";
    summary << "query_bound = " << params.query_bound << "\n";
    for (const auto &[x, h] : hits) {
        summary << "hit_frequency[" << x << "] = "
                << format_double(static_cast<double>(h.second) / static_cast<double>(h.first)) << " (" << h.second
                << "/" << h.first << ")\n";
    }
    return kExitOk;
}

int cmd_decode_state(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    resolve_seed(cfg, err);
    CodePtr code = code_from_config(cfg);
    CodewordStateDecoder decoder = default_decoder(code);
    uint64_t x = require(cfg.x, "x", "decode-state");
    uint64_t k = cfg.k.value_or(1);
    if (x >= code->message_count()) {
        throw ConfigError("x out of range");
    }
    StateVector s = codeword_state(*code, x, k);
    Rng rng = make_rng(*cfg.seed, 0, kMeasureStream);
    std::optional<uint64_t> label = decoder.sample(k, s.amplitudes(), rng);
    std::optional<uint64_t> msg = label ? decoder.postprocess(k, *label) : std::nullopt;
    out << "decoder = " << decoder.name() << "\n";
    out << "eta_floor = " << format_double(decoder.eta_floor()) << "\n";
    out << "success_probability = " << format_double(decoder.success_probability(k, x, s.amplitudes())) << "\n";
    out << "outcome_label = " << (label ? std::to_string(*label) : "-1") << "\n";
    out << "decoded = " << (msg ? std::to_string(*msg) : "none") << "\n";
    return msg == std::optional<uint64_t>(x) ? kExitOk : kExitNotFound;
}

int cmd_presence(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    resolve_seed(cfg, err);
    CodePtr code = code_from_config(cfg);
    OracleSource source = oracle_source(cfg, code);
    Rng noise_rng = make_rng(*cfg.seed, 0, kNoiseStream);
    CorruptedCodewordOracle oracle = build_oracle(source, noise_rng);
    std::vector<uint64_t> targets;
    if (cfg.x && source.noise == "adversarial-table") {
        targets.push_back(*cfg.x);
    } else if (code->message_count() <= kMaxPresenceRows) {
        for (uint64_t x = 0; x < code->message_count(); x++) {
            targets.push_back(x);
        }
    } else {
        throw CapacityError("presence: too many messages to tabulate");
    }
    out << cfg.provenance_header();
    out << "x,presence,best_k,best_kappa_abs\n";
    for (uint64_t x : targets) {
        ShuffleChoice best = best_shuffle(oracle, *code, x);
        out << x << "," << format_double(presence(oracle, *code, x)) << "," << best.k << ","
            << format_double(best.magnitude) << "\n";
    }
    return kExitOk;
}

int cmd_gen_legendre(ExperimentConfig cfg, std::ostream &out, std::ostream &) {
    uint64_t p = require(cfg.p, "p", "gen-legendre");
    CodeInstance code = CodeInstance::shifted_legendre(p);
    uint64_t x = cfg.x.value_or(0);
    if (x >= p) {
        throw ConfigError("x must be below p");
    }
    uint64_t length = cfg.length.value_or(p);
    if (length > p) {
        throw ConfigError("length must not exceed p");
    }
    std::string bits;
    bits.reserve(length);
    for (uint64_t r = 0; r < length; r++) {
        bits.push_back(static_cast<char>('0' + code.eval(x, r)));
    }
    out << bits << "\n";
    return kExitOk;
}

int cmd_invert_demo(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    resolve_seed(cfg, err);
    CodePtr code = code_from_config(cfg);
    CodewordStateDecoder decoder = default_decoder(code);
    std::vector<uint64_t> f = read_function_table(require(cfg.function, "function", "invert-demo"));
    uint64_t y = require(cfg.y, "y", "invert-demo");
    double eps = require(cfg.eps, "eps", "invert-demo");
    std::string noise = cfg.noise.value_or("predictor");
    if (noise != "predictor" && noise != "perfect" && noise != "uniform") {
        throw ConfigError("invert-demo supports noise = predictor | perfect | uniform");
    }
    if (f.size() != code->message_count()) {
        throw ConfigError("function table has " + std::to_string(f.size()) + " entries, code has " +
                          std::to_string(code->message_count()) + " messages");
    }
    auto hit = std::find(f.begin(), f.end(), y);
    Rng noise_rng = make_rng(*cfg.seed, 0, kNoiseStream);
    Rng measure_rng = make_rng(*cfg.seed, 0, kMeasureStream);
    std::optional<UnitaryMap> predictor;
    if (noise == "uniform" || hit == f.end()) {
        predictor = uniform_predictor(code->q(), code->block_length());
    } else {
        uint64_t x_star = static_cast<uint64_t>(hit - f.begin());
        double rate = noise == "perfect" ? 0.0 : cfg.rate.value_or(0.0);
        predictor = noisy_predictor(*code, x_star, rate, noise_rng);
    }
    InvertResult r = invert_demo(*predictor, decoder, f, y, eps, cfg.delta.value_or(0.5), measure_rng, *cfg.seed);
    out << "candidates =";
    for (uint64_t x : r.decode.candidate_list) {
        out << " " << x;
    }
    out << "\n";
    out << "queries = " << r.decode.query_count << "\n";
    if (!r.preimage) {
        out << "preimage = none\n";
        return kExitNotFound;
    }
    out << "preimage = " << *r.preimage << "\n";
    return kExitOk;
}

int cmd_johnson_check(ExperimentConfig cfg, std::ostream &out, std::ostream &err) {
    resolve_seed(cfg, err);
    CodePtr code = code_from_config(cfg);
    OracleSource source = oracle_source(cfg, code);
    Rng noise_rng = make_rng(*cfg.seed, 0, kNoiseStream);
    CorruptedCodewordOracle oracle = build_oracle(source, noise_rng);
    JohnsonCheck c = johnson_brute_check(*code, oracle, require(cfg.eps, "eps", "johnson-check"), cfg.d.value_or(0));
    out << "count = " << c.count << "\n";
    out << "J = " << c.bound << "\n";
    out << "pass = " << (c.pass ? "true" : "false") << "\n";
    return c.pass ? kExitOk : kExitNotFound;
}

int run_command(const std::string &name, const ExperimentConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        if (name == "bounds") {
            return cmd_bounds(cfg, out, err);
        }
        if (name == "listdecode") {
            return cmd_listdecode(cfg, out, err);
        }
        if (name == "decode-state") {
            return cmd_decode_state(cfg, out, err);
        }
        if (name == "presence") {
            return cmd_presence(cfg, out, err);
        }
        if (name == "gen-legendre") {
            return cmd_gen_legendre(cfg, out, err);
        }
        if (name == "invert-demo") {
            return cmd_invert_demo(cfg, out, err);
        }
        if (name == "johnson-check") {
            return cmd_johnson_check(cfg, out, err);
        }
        err << "error: unknown command '" << name << "'\n";
        return kExitConfig;
    } catch (const BoundInapplicable &e) {
        err << "error: " << e.what() << " (threshold = " << format_double(e.threshold) << ")\n";
        return kExitInapplicable;
    } catch (const DecoderInapplicable &e) {
        err << "error: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const DegenerateCode &e) {
        err << "error: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qld
