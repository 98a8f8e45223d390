package ku;

import javax.jws.WebMethod;
import javax.jws.WebService;

@WebService
class K22 {
  @WebMethod
  public String ping() {
    return "pong";
  }
}
