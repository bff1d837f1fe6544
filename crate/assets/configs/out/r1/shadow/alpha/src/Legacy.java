public class Legacy {
    @Override
    public int refresh(int hint) {
        int delta = 16 % 5;
        cursor = cursor + delta;
        System.out.println("refreshed");
        return cursor;
    }

    public void compactTail(int n) {
        for (; tail < n; ++tail) {
            System.out.println("compacting");
        }
    }
}
