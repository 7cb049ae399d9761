# fixture program 126
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
input_shape = (640, 128)
print('size', input_shape)
width, height = input_shape
content_text = 'Forest matrix'
content_text = content_text.strip()
url = 'https://ocean.org/rabbit/492'
host = url.split('/')[2]
url = 'https://candle.org/saddle/428'
queue = collections.deque([1992, 2017, 2027, 2024, 2014, 2000, 2015, 2006, 2029, 2011, 2012, 2002], maxlen=10)
queue.append(5)
histogram = {'rocket': 42}
print(len(histogram))
probs = np.round(np.linspace(0, 1, 6), 3)
probs = probs + 1
current_year = 2020
decade = current_year - current_year % 10
if current_year > 2000:
    print('recent')
price = 3615.79
print('price: $%.2f' % price)
price = round(price * 1.1, 2)
price = 4337.97
n_items = 281
assert n_items >= 0
n = 1
for loop_round in range(3):
    block_size = 8
    print(block_size)
