// Command-line front end: hash, verify, bench and tmto subcommands.
// Passwords are only ever read from stdin.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "argon2/core.hpp"
#include "argon2/encoding.hpp"
#include "argon2/errors.hpp"
#include "argon2/tmto.hpp"

namespace {

using Bytes = std::vector<std::uint8_t>;

struct CommonOptions {
    std::string variant = "i";
    std::uint32_t mem_kib = 1u << 20;  // 1 GiB of 1024-byte blocks
    std::uint32_t passes = 3;
    std::uint32_t lanes = 4;
    std::uint32_t tag_len = 32;
    std::string salt_hex;
    bool salt_stdin = false;
    bool password_stdin = true;
    std::string key_hex;
    std::string ad_hex;
    bool clear_memory = false;
    bool clear_password = false;
    bool clear_secret = false;
    int threads = 0;
    std::string trace_out;
};

Bytes parse_hex(const std::string& field, const std::string& hex) {
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) {
        throw argon2::ParseError(field, "odd-length hex string");
    }
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw argon2::ParseError(field, "invalid hex digit");
        }
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

Bytes read_stdin_all() {
    Bytes data;
    char buf[4096];
    while (std::cin.read(buf, sizeof(buf)) || std::cin.gcount() > 0) {
        data.insert(data.end(), buf, buf + std::cin.gcount());
    }
    return data;
}

void strip_trailing_newline(Bytes& data) {
    if (!data.empty() && data.back() == '\n') {
        data.pop_back();
    }
    if (!data.empty() && data.back() == '\r') {
        data.pop_back();
    }
}

// stdin carries the salt on the first line when --salt-stdin is given; the
// rest (minus one trailing newline) is the password.
void read_secrets(const CommonOptions& opt, Bytes& password, Bytes& salt) {
    Bytes all = read_stdin_all();
    if (opt.salt_stdin) {
        auto nl = std::find(all.begin(), all.end(), '\n');
        if (nl == all.end()) {
            throw argon2::ParamError("salt required: --salt-stdin needs a salt line before the password");
        }
        salt.assign(all.begin(), nl);
        if (!salt.empty() && salt.back() == '\r') {
            salt.pop_back();
        }
        password.assign(nl + 1, all.end());
    } else {
        salt = parse_hex("salt", opt.salt_hex);
        password = std::move(all);
    }
    strip_trailing_newline(password);
}

argon2::Params make_params(const CommonOptions& opt) {
    argon2::Params params;
    if (opt.variant == "d") {
        params.variant = argon2::Variant::data_dependent;
    } else if (opt.variant == "i") {
        params.variant = argon2::Variant::data_independent;
    } else {
        throw argon2::ParamError("variant: expected 'd' or 'i'");
    }
    params.memory_kib = opt.mem_kib;
    params.passes = opt.passes;
    params.lanes = opt.lanes;
    params.tag_len = opt.tag_len;
    params.secret = parse_hex("key", opt.key_hex);
    params.ad = parse_hex("ad", opt.ad_hex);
    return params;
}

void add_common_options(CLI::App* cmd, CommonOptions& opt, bool with_costs) {
    if (with_costs) {
        cmd->add_option("--variant", opt.variant, "variant: d (data-dependent) or i (data-independent)")
            ->check(CLI::IsMember({"d", "i"}));
        cmd->add_option("--mem-kib", opt.mem_kib, "memory in 1024-byte blocks");
        cmd->add_option("--passes", opt.passes, "number of passes over the memory");
        cmd->add_option("--lanes", opt.lanes, "parallel lanes");
        cmd->add_option("--tag-len", opt.tag_len, "output tag length in bytes");
    }
    cmd->add_option("--key", opt.key_hex, "optional secret key (hex)");
    cmd->add_option("--ad", opt.ad_hex, "optional associated data (hex)");
    cmd->add_option("--threads", opt.threads, "worker threads for the fill (0 = auto)");
}

int cmd_hash(const CommonOptions& opt) {
    Bytes password, salt;
    read_secrets(opt, password, salt);
    if (auto warning = argon2::salt_warning(salt)) {
        std::cerr << "warning: " << *warning << "\n";
    }

    argon2::Params params = make_params(opt);
    argon2::Flags flags{opt.clear_memory, opt.clear_password, opt.clear_secret};
    argon2::Execution exec{argon2::FillMode::lane_parallel, opt.threads};

    argon2::Tag tag = argon2::hash(params, password, salt, flags, exec);
    std::cout << argon2::encode_hash(params, salt, tag) << "\n";

    if (!opt.trace_out.empty()) {
        auto trace = argon2::tmto::capture_trace(params, password, salt);
        std::ofstream out(opt.trace_out);
        if (!out) {
            throw std::runtime_error("cannot open trace file " + opt.trace_out);
        }
        out << "pass,lane,slice,column,ref_lane,ref_column\n";
        for (const auto& e : trace.events) {
            out << e.pos.pass << ',' << e.pos.lane << ',' << e.pos.slice << ','
                << e.pos.column << ',' << e.ref_lane << ',' << e.ref_column << "\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonOptions& opt, const std::string& encoded) {
    const argon2::EncodedHash decoded = argon2::decode_hash(encoded);

    Bytes password = read_stdin_all();
    strip_trailing_newline(password);

    argon2::Params params;
    params.variant = decoded.variant;
    params.memory_kib = decoded.memory_kib;
    params.passes = decoded.passes;
    params.lanes = decoded.lanes;
    params.tag_len = static_cast<std::uint32_t>(decoded.tag.size());
    params.secret = parse_hex("key", opt.key_hex);
    params.ad = parse_hex("ad", opt.ad_hex);

    argon2::Execution exec{argon2::FillMode::lane_parallel, opt.threads};
    bool ok = argon2::verify(params, password, decoded.salt, {}, decoded.tag, exec);
    std::cout << (ok ? "ok" : "mismatch") << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const CommonOptions& opt) {
    Bytes password = {'b', 'e', 'n', 'c', 'h'};
    Bytes salt = {'b', 'e', 'n', 'c', 'h', 's', 'a', 'l', 't'};

    std::printf("mode,threads,lanes,passes,mem_kib,blocks,seconds,blocks_per_s,bytes_per_s\n");
    for (std::uint32_t mem : {opt.mem_kib / 4, opt.mem_kib / 2, opt.mem_kib}) {
        if (mem < 8 * opt.lanes) {
            continue;
        }
        for (auto mode : {argon2::FillMode::sequential, argon2::FillMode::lane_parallel}) {
            argon2::Params params = make_params(opt);
            params.memory_kib = mem;
            argon2::Execution exec{mode, opt.threads};

            auto start = std::chrono::steady_clock::now();
            argon2::hash(params, password, salt, {}, exec);
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

            const double blocks =
                static_cast<double>(params.block_count) * params.passes;
            const double per_s = blocks / elapsed.count();
            std::printf("%s,%d,%u,%u,%u,%u,%.4f,%.0f,%.0f\n",
                        mode == argon2::FillMode::sequential ? "serial" : "parallel",
                        opt.threads, params.lanes, params.passes, mem,
                        params.block_count, elapsed.count(), per_s, per_s * 1024.0);
        }
    }
    return 0;
}

int cmd_tmto(const CommonOptions& opt, const std::vector<std::uint32_t>& policies) {
    Bytes password = {'t', 'm', 't', 'o'};
    Bytes salt = {'t', 'm', 't', 'o', 's', 'a', 'l', 't'};

    argon2::Params params = make_params(opt);
    std::vector<argon2::tmto::TradeoffMetrics> metrics;
    for (std::uint32_t k : policies) {
        metrics.push_back(argon2::tmto::run_reduced(
            params, password, salt, argon2::tmto::StoragePolicy::every_kth(k)));
    }

    std::cout << argon2::tmto::format_csv(metrics);
    std::cout << "#\n";
    std::istringstream report(argon2::tmto::format_report(metrics));
    for (std::string line; std::getline(report, line);) {
        std::cout << "# " << line << "\n";
    }
    const auto verdict = argon2::tmto::hardness_verdict(metrics);
    for (const auto& point : verdict.points) {
        std::cout << "# alpha=" << point.alpha << ": D=" << point.d
                  << (point.holds ? " > " : " <= ") << "1/alpha=" << point.bound
                  << (point.holds ? " (penalty condition holds)" : " (gain possible)")
                  << "\n";
    }
    std::cout << "# verdict: " << verdict.summary << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"memory-hard password hashing with a reduced-memory tradeoff lab"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* hash_cmd = app.add_subcommand("hash", "hash a password from stdin, print the encoded tag");
    add_common_options(hash_cmd, opt, true);
    hash_cmd->add_option("--salt", opt.salt_hex, "salt (hex)");
    hash_cmd->add_flag("--salt-stdin", opt.salt_stdin, "read the salt from the first stdin line");
    hash_cmd->add_flag("--password-stdin", opt.password_stdin, "read the password from stdin (always on)");
    hash_cmd->add_flag("--clear-memory", opt.clear_memory, "wipe the block pool after hashing");
    hash_cmd->add_flag("--clear-password", opt.clear_password, "wipe the password buffer after absorbing it");
    hash_cmd->add_flag("--clear-secret", opt.clear_secret, "wipe the secret key after absorbing it");
    hash_cmd->add_option("--trace-out", opt.trace_out, "write the access trace CSV to this file");

    std::string encoded;
    auto* verify_cmd = app.add_subcommand("verify", "verify a stdin password against an encoded tag");
    verify_cmd->add_option("encoded", encoded, "encoded hash line")->required();
    add_common_options(verify_cmd, opt, false);
    verify_cmd->add_flag("--password-stdin", opt.password_stdin, "read the password from stdin (always on)");

    CommonOptions bench_opt;
    bench_opt.mem_kib = 8192;
    bench_opt.passes = 1;
    auto* bench_cmd = app.add_subcommand("bench", "fill throughput, serial vs parallel");
    add_common_options(bench_cmd, bench_opt, true);

    CommonOptions tmto_opt;
    tmto_opt.variant = "d";
    tmto_opt.mem_kib = 64;
    tmto_opt.passes = 1;
    tmto_opt.lanes = 1;
    std::vector<std::uint32_t> policies = {1, 2, 3, 4};
    auto* tmto_cmd = app.add_subcommand("tmto", "reduced-memory penalties for keep-every-kth policies");
    add_common_options(tmto_cmd, tmto_opt, true);
    tmto_cmd->add_option("--policy", policies, "keep-every-kth policy parameter(s)")
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(hash_cmd)) {
            return cmd_hash(opt);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(opt, encoded);
        }
        if (app.got_subcommand(bench_cmd)) {
            return cmd_bench(bench_opt);
        }
        if (app.got_subcommand(tmto_cmd)) {
            return cmd_tmto(tmto_opt, policies);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
