#pragma once

#include <cstddef>
#include <string>
#include <string_view>

typedef struct evp_md_ctx_st EVP_MD_CTX;

namespace odrk {

/// Incremental SHA-256, backed by OpenSSL's EVP interface. Digests are
/// rendered as lowercase hex.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(const void* data, size_t len);
    void update(std::string_view bytes) { update(bytes.data(), bytes.size()); }

    /// Finalizes and returns the hex digest; the object must not be reused.
    std::string finish_hex();

    static std::string hex_digest(std::string_view bytes);

private:
    EVP_MD_CTX* ctx_;
};

}  // namespace odrk
