#pragma once

#include <map>
#include <memory>
#include <string>

namespace smw {

struct HttpRequest {
  std::string method;  // "GET" / "POST"
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Stateless request handler behind every endpoint:
///   GET  /category /diagonals /ar-quiver /sms /tilting-graph /verify
///   POST /closure /tilt /torsion
/// Category parameters come from ?e=&w= (or "e"/"w" in a POST body).
/// Errors are ApiError documents: 400 domain, 404 route, 422 malformed body.
HttpResponse handle_request(const HttpRequest& request);

/// Thin cpp-httplib front end over handle_request.
class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds (port 0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace smw
