#include "cli_support.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "asdim/error.hpp"

namespace asdim::cli {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kCertificate:
      return kCertificateFailed;
    case ErrorKind::kUsage:
    case ErrorKind::kInvalidInput:
      return kUsageError;
    case ErrorKind::kPrecondition:
    case ErrorKind::kBudgetExhausted:
      return kPreconditionFailed;
    case ErrorKind::kInsufficientData:
      return kInsufficientData;
  }
  return kUsageError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kUsage, "unreadable-file", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kUsage, "unwritable-file", path);
  out << content;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::uint64_t cap_budget(std::uint64_t requested) {
  if (const char* env = std::getenv("ASDIM_MAX_NODES")) {
    try {
      return std::min<std::uint64_t>(requested, std::stoull(env));
    } catch (const std::exception&) {
      fail(ErrorKind::kUsage, "bad-env", "ASDIM_MAX_NODES must be a positive integer");
    }
  }
  return requested;
}

Manifest::Manifest(std::string command, Json config) : command_(std::move(command)), config_(std::move(config)) {}

void Manifest::add_file(const std::string& path, const std::string& content) {
  files_.push_back({{"path", path}, {"sha256", sha256_hex(content)}, {"bytes", content.size()}});
}

void Manifest::add_certificate(const std::string& name, const TransportCertificate& cert) {
  std::size_t failed = 0;
  for (const auto& e : cert.entries) failed += e.ok ? 0 : 1;
  certificates_.push_back({{"name", name}, {"pass", cert.pass()}, {"entries", cert.entries.size()}, {"failed", failed}});
}

std::string Manifest::render() const {
  Json out;
  out["schema"] = "asdim-manifest/1";
  out["tool"] = "asdim";
  out["version"] = ASDIM_VERSION;
  out["command"] = command_;
  out["config"] = config_;
  out["files"] = files_;
  out["certificates"] = certificates_;
  if (!timings_.is_null()) out["timings"] = timings_;
  return dump(out);
}

void emit(Manifest& manifest, const std::string& path, const std::string& content) {
  write_file(path, content);
  manifest.add_file(path, content);
}

}  // namespace asdim::cli
