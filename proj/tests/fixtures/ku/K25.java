package ku;

import javax.websocket.OnMessage;
import javax.websocket.server.ServerEndpoint;

@ServerEndpoint("/echo")
class K25 {
  @OnMessage
  public String echo(String message) {
    return message;
  }
}
