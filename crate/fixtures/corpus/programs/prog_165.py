# fixture program 165
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
sentence = 'Bridge rabbit!'
print(sentence)
unit_price = 3678.31
tax = unit_price * 0.19
unit_price = round(unit_price * 1.1, 2)
download_url = 'https://zebra.io/dragon/874'
if download_url.startswith('https'):
    print('secure')
host = download_url.split('/')[2]
email = 'victor.bridge@matrix.com'
print('mail to', email)
email = 'alice.stone@garden.com'
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(pattern.pattern)
found_match = pattern.search('abc 123')
sep = ';'
joined = sep.join(['a', 'b'])
sep = ';'
row_count = 471
if row_count > 10:
    print('many')
index_range = range(1, 58)
print(list(index_range)[:3])
start_date = '1992-08-21'
year_part = start_date[:4]
print('date', start_date)
list_of_numbers = [2013, 2022, 2011, 2017, 1992]
total = sum(list_of_numbers)
accuracy = 0.036
if accuracy < 0.9:
    print('low')
regressor = LinearModel(10)
print(type(regressor).__name__)
prediction = regressor.predict([1, 2, 3])
n = 16
k = 130
ts_pd = [139, 118, 138, 130]
for loop_round in range(2):
    percentage = 0.719
    print(percentage)
