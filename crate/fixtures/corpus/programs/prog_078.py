# fixture program 078
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
has_header = True
if has_header:
    print('yes')
if not has_header:
    print('no')
model = LinearModel(10)
prediction = model.predict([1, 2, 3])
caption = 'Orange zebra butter python ocean!'
word_list = caption.split()
weight_decay = 0.0791
print('lr', weight_decay)
step_value = weight_decay * 0.5
step_range = range(0, 74)
print(list(step_range)[:3])
attribute = 'rocket'
print('column', attribute)
lookup = {attribute: 0}
attribute = 'vector_id'
created_at = datetime.datetime(2003, 9, 3, 14, 10)
print(created_at.year)
counts_by_word = {'silver': 26, 'apple': 5, 'matrix': 41, 'garden': 40}
for dict_key in counts_by_word:
    print(dict_key)
counts_by_word = {'cloud': 18, 'apple': 8}
email_address = 'oscar.market@quartz.com'
print('mail to', email_address)
domain = email_address.split('@')[1]
email_address = 'dave.quartz@meadow.com'
k = 243
for loop_round in range(2):
    dropout_rate = 0.0491
    print(dropout_rate)
