"""Counting expression units in source code.

Comments vanish, string literals stay whole, identifiers and keywords are
case-folded, and every operator or punctuation character counts on its own.
"""

from zipfbenford import build_frequency_table, strip_comments, tokenize

java = '''
/* Sum the squares. */
public class Squares {
    public static void main(String[] args) {
        int total = 0;  // running sum
        for (int i = 1; i <= 10; i++) {
            total += i * i;
        }
        System.out.println("total = " + total);
    }
}
'''

print(strip_comments(java, "java").content)
stream = tokenize(java, "java")
print(" ".join(stream.tokens))

table = build_frequency_table(stream)
print(f"{table.total_tokens} tokens, {table.unique_count} distinct")
for rank in range(1, 9):
    print(f"{rank:3d}  {table.eu(rank)!r:12}  {table.count(rank)}")
