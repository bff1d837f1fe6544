public class Guard {
    public int select(int a, int b) {
        if (a != b) {
            a = 5;
        } else {
            b = 5;
        }
        return a + b;
    }

    public int clampPositive(int value) {
        int floor = 0;
        if (value < floor) {
            return floor;
        }
        return value;
    }

    public boolean withinBounds(int x, int low, int high) {
        boolean ok = true;
        if (x < low) {
            ok = false;
        }
        if (x > high) {
            ok = false;
        }
        return ok;
    }

    public int gradeOf(int score) {
        int cutoff = 50 + 10;
        if (score >= cutoff) {
            
            return 1;
        } else {
            
            return 0;
        }
    }

    public int saturatingStep(int x) {
        int step = 1 << 3;
        while (x > step) {
            x = x - step;
        }
        return x;
    }

    public void traceDecision(int flag) {
        if (flag > 0) {
            int verbose = 1;
            
        } else {
            
        }
    }

    public int mix(int seed) {
        int salt = 0x1F & 7;
        int mixed = seed;
        mixed = mixed ^ salt;
        return mixed;
    }

    public boolean strictOrder(int a, int b, int c) {
        boolean first = a < b;
        boolean second = b < c;
        return first && second;
    }
}
