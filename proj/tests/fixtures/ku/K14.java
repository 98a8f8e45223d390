package ku;

import java.io.IOException;
import java.nio.file.Files;
import java.nio.file.Path;

class K14 {
  boolean exists(Path p) throws IOException {
    return Files.exists(p);
  }
}
