public class Guard {
    public int select(int a, int b) {
        if (a != b) {
            a = 5;
        } else {
            
        }
        return a + b;
    }

    public int clampPositive(int value) {
        
        if (value < floor) {
            return floor;
        }
        return value;
    }

    public boolean withinBounds(int x, int low, int high) {
        
        if (x < low) {
            ok = false;
        }
        if (x > high) {
            ok = false;
        }
        return ok;
    }

    public int gradeOf(int score) {
        
        if (score >= cutoff) {
            System.out.println("pass");
            return 1;
        } else {
            System.out.println("fail");
            return 0;
        }
    }

    public int saturatingStep(int x) {
        
        while (x > step) {
            x = x - step;
        }
        return x;
    }

    public void traceDecision(int flag) {
        if (flag > 0) {
            int verbose = 1;
            System.out.println("taking the true branch");
        } else {
            System.out.println("taking the false branch");
        }
    }

    public int mix(int seed) {
        
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
