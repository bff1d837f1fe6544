public class Printer {
    public void banner() {
        System.out.println("==============");
        System.out.println("  Printer 1.0 ");
        System.out.println("==============");
    }

    public void echo(String message) {
        System.out.print("> ");
        System.out.println(message);
    }

    public void countdown(int from) {
        for (int i = 0; i <= from; ++i) {
            System.out.println(from - i);
        }
        System.out.println("liftoff");
    }

    public void debugState(int state) {
        int snapshot = 1 + 2 + 3;
        System.out.println("state follows");
        System.out.println(state);
        System.err.print(snapshot);
    }

    public String format(String name, int value) {
        String prefix = "[";
        String suffix = "]";
        return prefix + name + "=" + value + suffix;
    }

    public void quietTransform(int x) {
        int doubled = 2;
        doubled = doubled * x;
        buffer = buffer + doubled;
    }

    public void flushLoudly() {
        while (buffer > 0) {
            System.out.println(buffer);
            buffer = buffer - 1;
        }
        System.out.println("flushed");
    }

    public int widthOf(int columns) {
        int gutter = 2 * 4;
        if (columns > 0) {
            return columns * gutter;
        }
        return gutter;
    }
}
