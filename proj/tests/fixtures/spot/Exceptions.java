package spot;

import java.io.FileReader;
import java.io.IOException;

class Exceptions {
  static class BadInput extends Exception {
    BadInput(String message) {
      super(message);
    }
  }

  void load(String path) throws BadInput {
    try (FileReader in = new FileReader(path)) {
      in.read();
    } catch (IOException | IllegalStateException e) {
      throw new BadInput(e.getMessage());
    } finally {
      assert path != null;
    }
  }
}
