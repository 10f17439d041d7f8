#include "mdbv/digest.hpp"

#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace mdbv {
namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using MdCtx = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

MdCtx start(const EVP_MD* md, ByteView message) {
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), message.data(), message.size()) != 1) {
    throw std::runtime_error("OpenSSL digest initialisation failed");
  }
  return ctx;
}

}  // namespace

std::array<std::uint8_t, 32> sha256(ByteView message) {
  std::array<std::uint8_t, 32> out{};
  MdCtx ctx = start(EVP_sha256(), message);
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw std::runtime_error("SHA-256 failed");
  }
  return out;
}

Bytes shake256(ByteView message, std::size_t output_length) {
  Bytes out(output_length);
  MdCtx ctx = start(EVP_shake256(), message);
  if (EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw std::runtime_error("SHAKE256 failed");
  }
  return out;
}

}  // namespace mdbv
