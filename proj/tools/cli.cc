// Copyright 2026 The SDGR Authors.
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


#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sdgr/errors.h"
#include "sdgr/file_format.h"
#include "sdgr/games.h"
#include "sdgr/kem.h"
#include "sdgr/kex.h"
#include "sdgr/message_codec.h"
#include "sdgr/params.h"
#include "sdgr/pke.h"
#include "sdgr/rng.h"
#include "sdgr/serialization.h"

namespace sdgr::cli {
namespace {

struct Options {
  std::string set;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> l1;
  std::string in;
  std::string out;
  std::string params;
  std::string key;
  std::string message;
  unsigned threads = 1;
  unsigned iterations = 200;
};

Rng MakeRng(const Options& o) {
  return o.seed ? Rng::FromSeed(*o.seed) : Rng::FromEntropy();
}

void Require(const std::string& value, const char* flag) {
  if (value.empty()) throw DomainError(std::string("missing required ") + flag);
}

const ParamSet& LookupSet(const Options& o, std::ostream& err) {
  Require(o.set, "--set");
  const ParamSet& set = FindParamSet(o.set);
  if (set.desk_scale_only) {
    err << "warning: parameter set '" << set.name
        << "' is desk-scale only and offers no security\n";
  }
  return set;
}

Params LoadParams(const Options& o, std::ostream& err) {
  Require(o.params, "--params");
  Params params = ReadParamsFile(ReadBinaryFile(o.params));
  if (!o.set.empty()) {
    const ParamSet& set = LookupSet(o, err);
    const Field& f = params.ring().field();
    if (f.p() != set.p || f.m() != set.m || params.ring().n() != set.n) {
      throw ParameterMismatch("parameter file does not match set '" + o.set + "'");
    }
  }
  return params;
}

std::string Describe(const Params& params) {
  const SkewRing& ring = params.ring();
  return "p=" + std::to_string(ring.field().p()) +
         " m=" + std::to_string(ring.field().m()) +
         " n=" + std::to_string(ring.n()) +
         " lambda=" + std::to_string(ring.field().lambda()) +
         " h=" + std::string(SubspaceName(ring.Classify(params.h())));
}

std::string RingHex(const SkewRing& ring, const RingElement& a) {
  return ToHex(EncodeRing(ring, a));
}

// ---- commands ---------------------------------------------------------------

int CmdParams(const Options& o, std::ostream& out, std::ostream& err) {
  const ParamSet& set = LookupSet(o, err);
  Require(o.out, "--out");
  Rng rng = MakeRng(o);
  const Params params = Params::Generate(set, rng);
  WriteBinaryFile(o.out, WriteParamsFile(params));
  out << "set=" << set.name << " " << Describe(params) << "\n";
  return 0;
}

int CmdKeygen(const Options& o, std::ostream& out, std::ostream& err) {
  const Params params = LoadParams(o, err);
  Require(o.out, "--out");
  const KeyLength l1 = KeyLengthFromBits(o.l1.value_or(256));
  Rng rng = MakeRng(o);
  const KemKeypair kp = KemKeygen(params, rng);
  const std::string pub = o.out + ".pub";
  const std::string priv = o.out + ".priv";
  WriteBinaryFile(pub, WritePublicKeyFile(params, l1, kp.public_key));
  WriteBinaryFile(priv, WritePrivateKeyFile(params, l1, kp.private_key));
  out << "public key: " << pub << "\nprivate key: " << priv << "\n";
  return 0;
}

int CmdEncaps(const Options& o, std::ostream& out, std::ostream& err) {
  const Params params = LoadParams(o, err);
  Require(o.in, "--in");
  Require(o.out, "--out");
  const PublicKeyFile pub = ReadPublicKeyFile(params, ReadBinaryFile(o.in));
  if (o.l1 && KeyLengthFromBits(*o.l1) != pub.l1) {
    throw ParameterMismatch("--l1 differs from the key length fixed at keygen");
  }
  Rng rng = MakeRng(o);
  const Encapsulation enc = KemEncaps(params, pub.public_key, pub.l1, rng);
  WriteBinaryFile(o.out, WriteCiphertextFile(params, pub.l1, enc.ciphertext));
  out << enc.key.Hex() << "\n";
  return 0;
}

int CmdDecaps(const Options& o, std::ostream& out, std::ostream& err) {
  const Params params = LoadParams(o, err);
  Require(o.key, "--key");
  Require(o.in, "--in");
  const PrivateKeyFile priv = ReadPrivateKeyFile(params, ReadBinaryFile(o.key));
  const CiphertextFile ct = ReadCiphertextFile(params, ReadBinaryFile(o.in));
  if (ct.l1 != priv.l1 || (o.l1 && KeyLengthFromBits(*o.l1) != priv.l1)) {
    throw ParameterMismatch("ciphertext and private key use different l1");
  }
  out << KemDecaps(params, priv.key, ct.ciphertext, priv.l1).Hex() << "\n";
  return 0;
}

int CmdKexDemo(const Options& o, std::ostream& out, std::ostream& err) {
  const ParamSet& set = LookupSet(o, err);
  Rng rng = MakeRng(o);
  const Params params = Params::Generate(set, rng);
  const std::string sid =
      "sid-" + (o.seed ? std::to_string(*o.seed) : std::to_string(rng.NextU64()));
  KexSession alice(params, "party-i", sid, rng);
  KexSession bob(params, "party-j", sid, rng);
  const SkewRing& ring = params.ring();
  out << "set=" << set.name << " " << Describe(params) << "\n"
      << "session: " << sid << "\n"
      << "pk_i: " << RingHex(ring, alice.outgoing().pk) << "\n"
      << "pk_j: " << RingHex(ring, bob.outgoing().pk) << "\n";
  const RingElement k_i = alice.Finish(bob.outgoing());
  const RingElement k_j = bob.Finish(alice.outgoing());
  out << "k_i: " << RingHex(ring, k_i) << "\n"
      << "k_j: " << RingHex(ring, k_j) << "\n";
  if (k_i != k_j) {
    out << "keys differ\n";
    return 1;
  }
  out << "keys match\n";
  return 0;
}

int CmdSolveSdpd(const Options& o, std::ostream& out, std::ostream& err) {
  Options opts = o;
  if (opts.set.empty()) opts.set = "toy";
  const ParamSet& set = LookupSet(opts, err);
  Rng rng = MakeRng(opts);
  const Params params = Params::Generate(set, rng);
  const std::uint64_t space = SdpdSearchSpace(params.ring());
  out << "search space: " << space << "\n";
  const CsdpChallenge challenge = MakeCsdpChallenge(params, rng);
  const SdpdInstance sdpd{params, challenge.instance.pk2};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SecretPair> witnesses =
      SdpdBruteForce(sdpd, std::max(1u, opts.threads));
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool planted = std::find(witnesses.begin(), witnesses.end(),
                                 challenge.secret2) != witnesses.end();
  bool all_recover = !witnesses.empty();
  for (const SecretPair& w : witnesses) {
    all_recover = all_recover &&
                  CsdpVerify(challenge, CsdpKeyFromWitness(challenge.instance, w));
  }
  out << "witnesses: " << witnesses.size() << "\n"
      << "planted witness found: " << (planted ? "true" : "false") << "\n"
      << "CSDP key recovered: " << (all_recover ? "true" : "false") << "\n"
      << "elapsed_s: " << seconds << "\n";
  return planted && all_recover ? 0 : 1;
}

template <typename Fn>
double MeanMicros(unsigned iterations, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned i = 0; i < iterations; ++i) fn();
  const std::chrono::duration<double, std::micro> total =
      std::chrono::steady_clock::now() - start;
  return total.count() / iterations;
}

int CmdBench(const Options& o, std::ostream& out, std::ostream& err) {
  const ParamSet& set = LookupSet(o, err);
  const unsigned iters = std::max(1u, o.iterations);
  Rng rng = MakeRng(o);
  const Params params = Params::Generate(set, rng);
  const SkewRing& ring = params.ring();
  const std::uint64_t n = ring.n();
  const std::uint64_t f = ring.field().FrobeniusLadderCost();
  const RingElement a = ring.SampleRing(rng);
  const RingElement b = ring.SampleRing(rng);

  out << "set=" << set.name << " " << Describe(params) << " f=" << f
      << " kernel=" << KernelName(ring.kernel()) << "\n";
  out << "timings (mean microseconds over " << iters << " runs)\n";
  for (ProductKernel k : {ProductKernel::kReference, ProductKernel::kPortable,
                          ProductKernel::kAvx2}) {
    if (!KernelUsable(k, ring.field().p(), ring.n())) continue;
    const double us = MeanMicros(iters, [&] { (void)ring.ProductWith(k, a, b); });
    out << "  product[" << KernelName(k) << "]: " << us << "\n";
  }
  out << "  adjunct: " << MeanMicros(iters, [&] { (void)ring.Adjunct(a); }) << "\n";
  out << "  add: " << MeanMicros(iters, [&] { (void)ring.Add(a, b); }) << "\n";

  const unsigned proto_iters = std::max(1u, iters / 10);
  const KemKeypair kp = KemKeygen(params, rng);
  Encapsulation enc;
  out << "  kem_keygen: "
      << MeanMicros(proto_iters, [&] { (void)KemKeygen(params, rng); }) << "\n";
  out << "  kem_encaps: " << MeanMicros(proto_iters, [&] {
    enc = KemEncaps(params, kp.public_key, KeyLength::k256, rng);
  }) << "\n";
  out << "  kem_decaps: " << MeanMicros(proto_iters, [&] {
    (void)KemDecaps(params, kp.private_key, enc.ciphertext, KeyLength::k256);
  }) << "\n";

  OpCounts product, adjunct, add;
  (void)ring.ProductReference(a, b, &product);
  (void)ring.Adjunct(a, &adjunct);
  (void)ring.Add(a, b, &add);
  struct Row {
    const char* name;
    std::uint64_t measured;
    std::uint64_t model;
  };
  const Row rows[] = {
      {"product field additions", product.field_adds, 4 * n * n},
      {"product field multiplications", product.ModelledMuls(f),
       4 * n * n * (1 + f)},
      {"adjunct field multiplications", adjunct.ModelledMuls(f), 2 * n * f},
      {"addition field additions", add.field_adds, 2 * n},
  };
  bool all_match = true;
  out << "operation counts (measured vs model)\n";
  for (const Row& r : rows) {
    const bool match = r.measured == r.model;
    all_match = all_match && match;
    out << "  " << r.name << ": " << r.measured << " vs " << r.model << " "
        << (match ? "ok" : "MISMATCH") << "\n";
  }
  out << "  sigma applications in product: " << product.sigma_applications
      << " of " << product.homomorphism_applications << "\n";
  return all_match ? 0 : 1;
}

int CmdPkeDemo(const Options& o, std::ostream& out, std::ostream& err) {
  const ParamSet& set = LookupSet(o, err);
  Rng rng = MakeRng(o);
  const Params params = Params::Generate(set, rng);
  const SkewRing& ring = params.ring();
  const std::vector<std::uint8_t> bytes(o.message.begin(), o.message.end());
  const RingElement m = EncodeMessage(ring, bytes);
  const PkeKeypair kp = PkeGen(params, rng);
  const Ciphertext c = PkeEnc(params, m, kp.pk, SampleSecretPair(ring, rng));
  const std::vector<std::uint8_t> back = DecodeMessage(ring, PkeDec(ring, c, kp.sk));
  out << "capacity: " << MessageCapacity(ring) << " bytes\n"
      << "ciphertext: " << ToHex(EncodeCiphertext(ring, c)) << "\n"
      << "recovered: " << std::string(back.begin(), back.end()) << "\n";
  if (back != bytes) {
    out << "round trip: failed\n";
    return 1;
  }
  out << "round trip: ok\n";
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Skew dihedral group ring key exchange, PKE and KEM toolkit", "sdgr"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Deterministic seed (default: system entropy)");
  };
  auto add_set = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--set", o.set, "Parameter set: p19, p23, p31, p41, toy");
    if (required) opt->required();
  };
  auto add_l1 = [&](CLI::App* cmd) {
    cmd->add_option("--l1", o.l1, "Session key length in bits")
        ->check(CLI::IsMember({128u, 192u, 256u}));
  };

  struct Command {
    CLI::App* app;
    std::function<int(const Options&, std::ostream&, std::ostream&)> run;
  };
  std::vector<Command> commands;

  auto* params = app.add_subcommand("params", "Generate a parameter file");
  add_set(params, true);
  add_seed(params);
  params->add_option("--out", o.out, "Output parameter file")->required();
  commands.push_back({params, CmdParams});

  auto* keygen = app.add_subcommand("keygen", "Generate a KEM key pair");
  keygen->add_option("--params", o.params, "Parameter file")->required();
  keygen->add_option("--out", o.out, "Output prefix for .pub and .priv")->required();
  add_set(keygen, false);
  add_seed(keygen);
  add_l1(keygen);
  commands.push_back({keygen, CmdKeygen});

  auto* encaps = app.add_subcommand("encaps", "Encapsulate to a public key");
  encaps->add_option("--params", o.params, "Parameter file")->required();
  encaps->add_option("--in", o.in, "Public key file")->required();
  encaps->add_option("--out", o.out, "Output ciphertext file")->required();
  add_set(encaps, false);
  add_seed(encaps);
  add_l1(encaps);
  commands.push_back({encaps, CmdEncaps});

  auto* decaps = app.add_subcommand("decaps", "Decapsulate a ciphertext");
  decaps->add_option("--params", o.params, "Parameter file")->required();
  decaps->add_option("--key", o.key, "Private key file")->required();
  decaps->add_option("--in", o.in, "Ciphertext file")->required();
  add_set(decaps, false);
  add_l1(decaps);
  commands.push_back({decaps, CmdDecaps});

  auto* kexdemo = app.add_subcommand("kexdemo", "Run both sides of the key exchange");
  add_set(kexdemo, true);
  add_seed(kexdemo);
  commands.push_back({kexdemo, CmdKexDemo});

  auto* solve = app.add_subcommand("solve-sdpd", "Brute-force a toy decomposition instance");
  add_set(solve, false);
  add_seed(solve);
  solve->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  commands.push_back({solve, CmdSolveSdpd});

  auto* bench = app.add_subcommand("bench", "Time ring and KEM operations, check op counts");
  add_set(bench, true);
  add_seed(bench);
  bench->add_option("--iterations", o.iterations, "Runs per timing")
      ->check(CLI::Range(1u, 1000000u));
  commands.push_back({bench, CmdBench});

  auto* pkedemo = app.add_subcommand("pkedemo", "Encrypt and decrypt a short text message");
  add_set(pkedemo, true);
  add_seed(pkedemo);
  pkedemo->add_option("--message", o.message, "Text to encrypt")->required();
  commands.push_back({pkedemo, CmdPkeDemo});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    for (const Command& c : commands) {
      if (c.app->parsed()) return c.run(o, out, err);
    }
    return 1;
  } catch (const CorruptFile& e) {
    err << "error: corrupt file: " << e.what() << "\n";
    return kExitCorruptFile;
  } catch (const ParameterMismatch& e) {
    err << "error: parameter mismatch: " << e.what() << "\n";
    return kExitParameterMismatch;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sdgr::cli
