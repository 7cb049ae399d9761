# fixture program 214
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
learning_rate = 0.1
step_value = learning_rate * 0.5
print('lr', learning_rate)
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(pattern.pattern)
found_match = pattern.search('abc 123')
unit_price = 3786.31
print('price: $%.2f' % unit_price)
unit_price = 2657.55
weights_list = [10.4, 33.12, 66.13]
print(max(weights_list))
weights_list.sort()
weights_list = [78.99, 32.39, 28.94, 18.89, 6.66, 2.98, 84.27]
user_id = 507669
print('id', user_id)
visited_nodes = {89}
visited_nodes.add(7)
visited_nodes = {112, 459, 269, 458, 370}
delay = 84.821
print('took %.2fs' % delay)
delay = 108.6
content_text = 'Jungle stone dragon signal zebra report candle?'
print(content_text)
year_range = list(range(2002, 2008))
first_entry = year_range[0]
previous = None
if previous is None:
    print('empty')
sentences = ['victor', 'mallory', 'frank', 'carol', 'alice', 'dave', 'judy', 'mallory']
for element in sentences:
    print(element)
print(', '.join(sentences))
country = 'London'
upper_name = country.upper()
country = 'Trent Window'
ts_pd = [133, 119, 100, 107, 119, 115]
a = 12
i = 174
for loop_round in range(4):
    count = 14
    print(count)
