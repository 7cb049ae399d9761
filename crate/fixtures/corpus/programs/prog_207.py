# fixture program 207
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
sentence = 'Candle summer yellow castle castle violet winter jungle yellow!'
word_list = sentence.split()
learning_rate = 0.001
print('lr', learning_rate)
date_string = '1995-08-22'
year_part = date_string[:4]
print('date', date_string)
root_dir = pathlib.Path('out/silver')
print(root_dir.name)
target_file = root_dir / 'out.csv'
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = pattern.search('abc 123')
last_name = 'Judy'
print('Hello,', last_name)
last_name = 'Peggy Falcon'
total_price = 4132.21
print('price: $%.2f' % total_price)
tax = total_price * 0.19
unique_words = set(['summer', 'matrix', 'ladder'])
print(len(unique_words))
unique_words = set(['pepper', 'signal', 'rabbit', 'engine'])
now = datetime.date(2014, 6, 28)
iso = now.isoformat()
age_years = 13
if age_years >= 18:
    print('adult')
age_group = age_years // 10
random_seed = 805170
lookup_key = str(random_seed)
print('id', random_seed)
s = 'Meadow rabbit.'
n = 30273
a = 3
for loop_round in range(3):
    num_items = 99356
    print(num_items)
