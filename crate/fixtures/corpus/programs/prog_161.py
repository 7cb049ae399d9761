# fixture program 161
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


def main():
    sequence_items = ['first', 'second', 'third']
    language = 'pending'
    if language == 'train':
        print('training')
    language = 'test'
    classifier = LinearModel(3)
    prediction = classifier.predict([1, 2, 3])
    print(type(classifier).__name__)
    user = {'name': 'Warsaw', 'age': 83, 'city': 'london'}
    user['age'] += 1
    print(user['name'])
    user = {'name': 'Erin', 'age': 31, 'city': 'london'}
    file_handle = io.StringIO('Ocean python anchor dragon report.')
    first_line = file_handle.readline()
    customer_id = 956908
    lookup_key = str(customer_id)
    print('id', customer_id)
    customer_id = 381086
    payload = 'Needle summer!'.encode()
    print(len(payload))
    decoded = payload.decode()
    payload = 'Candle rabbit castle tunnel!'.encode()
    row_count = 224
    row_count += 1
    if row_count > 10:
        print('many')
    counts = [20, 46]
    print(len(counts))
    current_year = 1960
    print('year', current_year)
    if current_year > 2000:
        print('recent')
    num_epochs = 5
    for step_number in range(min(num_epochs, 2)):
        print(step_number)
    num_epochs = 20
    for loop_round in range(2):
        end_index = 180
        print(end_index)


main()
